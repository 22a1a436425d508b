#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seppack/errors.hpp"
#include "seppack/planar/polygon.hpp"

namespace seppack::planar {

namespace detail {

using i128 = __int128;

inline bool fits(const Integer &z, unsigned bits) {
  return boost::multiprecision::abs(z) < (Integer(1) << bits);
}

// Integer edge data: N_k . x <= H_k describes K, with N_k, H_k integers.
struct IntegerEdges {
  std::vector<Integer> nx, ny, h;
  bool small = false; // all fit in 40 bits
  std::vector<std::int64_t> nx64, ny64, h64;

  explicit IntegerEdges(const SymmetricPolygon &K) {
    small = true;
    for (const Edge &e : K.edges()) {
      Integer s = boost::multiprecision::lcm(denominator_of(e.normal.x), denominator_of(e.normal.y));
      s = boost::multiprecision::lcm(s, denominator_of(e.offset));
      nx.push_back(numerator_of(e.normal.x) * (s / denominator_of(e.normal.x)));
      ny.push_back(numerator_of(e.normal.y) * (s / denominator_of(e.normal.y)));
      h.push_back(numerator_of(e.offset) * (s / denominator_of(e.offset)));
      small = small && fits(nx.back(), 40) && fits(ny.back(), 40) && fits(h.back(), 40);
    }
    if (small)
      for (std::size_t k = 0; k < nx.size(); ++k) {
        nx64.push_back(nx[k].convert_to<std::int64_t>());
        ny64.push_back(ny[k].convert_to<std::int64_t>());
        h64.push_back(h[k].convert_to<std::int64_t>());
      }
  }
};

} // namespace detail

/// Translates centres[i] + K. Construction rejects coincident centres and overlapping translates.
class PlanarPacking {
public:
  PlanarPacking(SymmetricPolygon body, std::vector<Point> centers)
      : body_(std::move(body)), centers_(std::move(centers)), edges_(body_) {
    prepare();
    if (auto bad = first_overlap())
      throw PackingViolation(bad->first, bad->second,
                             centers_[bad->first] == centers_[bad->second] ? "have the same centre"
                                                                           : "overlap (gauge of centre difference < 2)");
  }

  /// Checks the packing condition without throwing; returns the first offending pair.
  static std::optional<std::pair<std::size_t, std::size_t>> find_overlap(const SymmetricPolygon &body,
                                                                         const std::vector<Point> &centers) {
    PlanarPacking p(body, centers, unchecked_tag{});
    return p.first_overlap();
  }

  const SymmetricPolygon &body() const noexcept { return body_; }
  const std::vector<Point> &centers() const noexcept { return centers_; }
  const Point &center(std::size_t i) const { return centers_[i]; }
  std::size_t size() const noexcept { return centers_.size(); }

  /// sign(gauge(c_i - c_j) - 2), exactly.
  int compare_to_touching(std::size_t i, std::size_t j) const {
    if (fast_) {
      const auto px = static_cast<detail::i128>(px_[i]) - px_[j], py = static_cast<detail::i128>(py_[i]) - py_[j];
      int best = -1;
      for (std::size_t k = 0; k < edges_.nx64.size(); ++k) {
        const detail::i128 lhs = edges_.nx64[k] * px + edges_.ny64[k] * py;
        const detail::i128 rhs = 2 * static_cast<detail::i128>(edges_.h64[k]) * q64_;
        if (lhs > rhs)
          return 1;
        if (lhs == rhs)
          best = 0;
      }
      return best;
    }
    const Rational g = body_.gauge(centers_[i] - centers_[j]);
    return g > 2 ? 1 : (g == 2 ? 0 : -1);
  }

  /// Calls f(i, j) with i < j for every pair whose translates could meet (a superset of the
  /// touching and overlapping pairs), in increasing (i, j) order.
  template <class F> void for_each_near_pair(F &&f) const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          auto it = buckets_.find(key(bx_[i] + dx, by_[i] + dy));
          if (it == buckets_.end())
            continue;
          for (std::size_t j : it->second)
            if (j > i)
              pairs.emplace_back(i, j);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [i, j] : pairs)
      f(i, j);
  }

private:
  struct unchecked_tag {};
  PlanarPacking(const SymmetricPolygon &body, const std::vector<Point> &centers, unchecked_tag)
      : body_(body), centers_(centers), edges_(body_) {
    prepare();
  }

  static std::int64_t key(std::int64_t x, std::int64_t y) { return (x << 32) ^ (y & 0xffffffff); }

  void prepare() {
    // Buckets wider than the largest possible contact distance 2R.
    const double w = 2.0 * body_.radius_bound() * (1.0 + 1e-6);
    bx_.resize(centers_.size());
    by_.resize(centers_.size());
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      bx_[i] = static_cast<std::int64_t>(std::floor(to_double(centers_[i].x) / w));
      by_[i] = static_cast<std::int64_t>(std::floor(to_double(centers_[i].y) / w));
      buckets_[key(bx_[i], by_[i])].push_back(i);
    }

    // Common denominator and integer coordinates for the fast comparison.
    fast_ = edges_.small;
    Integer q = 1;
    for (const Point &c : centers_) {
      if (!fast_)
        break;
      q = boost::multiprecision::lcm(q, denominator_of(c.x));
      q = boost::multiprecision::lcm(q, denominator_of(c.y));
      fast_ = detail::fits(q, 40);
    }
    if (!fast_)
      return;
    px_.reserve(centers_.size());
    py_.reserve(centers_.size());
    for (const Point &c : centers_) {
      Integer x = numerator_of(c.x) * (q / denominator_of(c.x));
      Integer y = numerator_of(c.y) * (q / denominator_of(c.y));
      if (!detail::fits(x, 60) || !detail::fits(y, 60)) {
        fast_ = false;
        return;
      }
      px_.push_back(x.convert_to<std::int64_t>());
      py_.push_back(y.convert_to<std::int64_t>());
    }
    q64_ = q.convert_to<std::int64_t>();
  }

  std::optional<std::pair<std::size_t, std::size_t>> first_overlap() const {
    std::optional<std::pair<std::size_t, std::size_t>> out;
    for_each_near_pair([&](std::size_t i, std::size_t j) {
      if (!out && compare_to_touching(i, j) < 0)
        out = std::make_pair(i, j);
    });
    return out;
  }

  SymmetricPolygon body_;
  std::vector<Point> centers_;
  detail::IntegerEdges edges_;
  std::vector<std::int64_t> bx_, by_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets_;
  bool fast_ = false;
  std::vector<std::int64_t> px_, py_;
  std::int64_t q64_ = 1;
};

/// Touching relation of a packing: edges (i, j), i < j, in lexicographic order.
struct ContactGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [i, j] : edges) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    return adj;
  }
  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n, 0);
    for (auto [i, j] : edges) {
      ++d[i];
      ++d[j];
    }
    return d;
  }
  std::size_t max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }
  bool connected() const {
    if (n == 0)
      return true;
    auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  }
  /// Number of 3-cycles.
  std::size_t triangle_count() const {
    auto adj = adjacency();
    for (auto &a : adj)
      std::sort(a.begin(), a.end());
    std::size_t count = 0;
    for (auto [i, j] : edges)
      for (auto k : adj[i])
        if (k > j && std::binary_search(adj[j].begin(), adj[j].end(), k))
          ++count;
    return count;
  }
};

inline ContactGraph contact_graph(const PlanarPacking &p) {
  ContactGraph g;
  g.n = p.size();
  p.for_each_near_pair([&](std::size_t i, std::size_t j) {
    const int c = p.compare_to_touching(i, j);
    if (c < 0)
      throw PackingViolation(i, j, "overlap (gauge of centre difference < 2)");
    if (c == 0)
      g.edges.emplace_back(i, j);
  });
  return g;
}

} // namespace seppack::planar

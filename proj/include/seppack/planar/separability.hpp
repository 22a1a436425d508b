#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "seppack/planar/packing.hpp"

namespace seppack::planar {

/// The line {x : normal . x = offset}, separating translates i and j.
struct SeparatingLine {
  std::size_t i = 0;
  std::size_t j = 0;
  Point normal;
  Rational offset;
};

struct BlockedPair {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::size_t> blocking; // translates cut by every admissible line tried
};

struct SeparabilityResult {
  bool separable = true;
  std::vector<SeparatingLine> lines;  // one per touching pair that could be separated
  std::vector<BlockedPair> blocked;   // touching pairs with no admissible line
};

namespace detail {

// Outward normals of K at boundary point p: one edge normal, or the two normals at a vertex.
inline std::vector<Point> normal_cone(const SymmetricPolygon &K, const Point &p) {
  std::vector<std::size_t> on;
  for (std::size_t k = 0; k < K.size(); ++k)
    if (dot(K.edge(k).normal, p) == K.edge(k).offset)
      on.push_back(k);
  if (on.empty())
    throw InternalError("contact point " + to_string(p) + " is not on the boundary");
  if (on.size() == 1)
    return {K.edge(on[0]).normal};
  // Consecutive edges k-1, k meet at p; keep counterclockwise order of the normals.
  std::size_t a = on[0], b = on[1];
  if (!(b == a + 1))
    std::swap(a, b); // wrap-around: edges n-1 and 0
  return {K.edge(a).normal, K.edge(b).normal};
}

// phi(s) = (1 - s) n0 + s n1.
inline Point blend(const Point &n0, const Point &n1, const Rational &s) { return Rational(1 - s) * n0 + s * n1; }

} // namespace detail

/// For each touching pair (i, j), looks for a line through the contact point that separates the
/// two translates and misses the interior of every other translate.
///
/// With p = (c_j - c_i) / 2 and phi an outward normal of K at p, translate t (offset d_t = c_t - c_i)
/// is missed iff phi . (d_t - 2p) >= 0 or phi . d_t <= 0. Over a vertex cone phi(s) both are
/// linear in s, so the feasible set is a union of closed intervals whose endpoints are among
/// s = 0, 1 and the constraint roots; checking those candidates decides feasibility exactly.
inline SeparabilityResult verify_total_separability(const PlanarPacking &P, const ContactGraph &g) {
  const SymmetricPolygon &K = P.body();
  SeparabilityResult out;
  const std::size_t n = P.size();

  for (auto [i, j] : g.edges) {
    const Point delta = P.center(j) - P.center(i);
    const Point p = Rational(1, 2) * delta;
    const auto cone = detail::normal_cone(K, p);

    std::vector<Point> d(n), far(n);
    for (std::size_t t = 0; t < n; ++t) {
      d[t] = P.center(t) - P.center(i);
      far[t] = d[t] - delta;
    }

    auto blocker = [&](const Point &phi) -> std::optional<std::size_t> {
      for (std::size_t t = 0; t < n; ++t) {
        if (t == i || t == j)
          continue;
        if (dot(phi, far[t]) >= 0 || dot(phi, d[t]) <= 0)
          continue;
        return t;
      }
      return std::nullopt;
    };

    std::vector<Point> candidates;
    if (cone.size() == 1) {
      candidates.push_back(cone[0]);
    } else {
      std::vector<Rational> ss{Rational(0), Rational(1)};
      auto add_root = [&](const Point &v) {
        const Rational a0 = dot(cone[0], v), a1 = dot(cone[1], v);
        if (a0 == a1)
          return;
        Rational s = a0 / (a0 - a1);
        if (s > 0 && s < 1)
          ss.push_back(s);
      };
      for (std::size_t t = 0; t < n; ++t) {
        if (t == i || t == j)
          continue;
        add_root(far[t]);
        add_root(d[t]);
      }
      std::sort(ss.begin() + 2, ss.end());
      ss.erase(std::unique(ss.begin() + 2, ss.end()), ss.end());
      for (const auto &s : ss)
        candidates.push_back(detail::blend(cone[0], cone[1], s));
    }

    std::set<std::size_t> blocking;
    bool found = false;
    for (const Point &phi : candidates) {
      auto b = blocker(phi);
      if (!b) {
        out.lines.push_back({i, j, phi, dot(phi, P.center(i) + p)});
        found = true;
        break;
      }
      blocking.insert(*b);
    }
    if (!found) {
      out.separable = false;
      out.blocked.push_back({i, j, std::vector<std::size_t>(blocking.begin(), blocking.end())});
    }
  }
  return out;
}

inline SeparabilityResult verify_total_separability(const PlanarPacking &P) {
  return verify_total_separability(P, contact_graph(P));
}

} // namespace seppack::planar

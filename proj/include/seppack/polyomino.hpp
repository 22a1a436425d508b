#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seppack/errors.hpp"

namespace seppack {

enum class Lattice { square, king, triangular };

inline const char *lattice_name(Lattice l) {
  switch (l) {
  case Lattice::square: return "square";
  case Lattice::king: return "king";
  case Lattice::triangular: return "triangular";
  }
  return "?";
}

inline Lattice parse_lattice(std::string_view s) {
  if (s == "square")
    return Lattice::square;
  if (s == "king")
    return Lattice::king;
  if (s == "triangular" || s == "tri")
    return Lattice::triangular;
  throw ParameterError("unknown lattice '" + std::string(s) + "'");
}

struct Cell {
  long x = 0;
  long y = 0;
  auto operator<=>(const Cell &) const = default;
};

/// Half of each lattice's neighbour offsets; the other half are the negatives.
/// Triangular cells use axial coordinates, neighbours (1,0), (0,1), (1,1).
inline std::span<const Cell> forward_offsets(Lattice l) {
  static constexpr std::array<Cell, 2> sq{{{1, 0}, {0, 1}}};
  static constexpr std::array<Cell, 4> king{{{1, 0}, {0, 1}, {1, 1}, {1, -1}}};
  static constexpr std::array<Cell, 3> tri{{{1, 0}, {0, 1}, {1, 1}}};
  switch (l) {
  case Lattice::square: return sq;
  case Lattice::king: return king;
  case Lattice::triangular: return tri;
  }
  return sq;
}

/// Maximal vertical run of cells {x} x [y0, y1].
struct CellRun {
  long x = 0, y0 = 0, y1 = 0;
};

namespace detail {

// Every forward offset is (0, 1) or (1, dy); these are the dy values.
inline std::span<const long> cross_column_dy(Lattice l) {
  static constexpr std::array<long, 1> sq{0};
  static constexpr std::array<long, 3> king{-1, 0, 1};
  static constexpr std::array<long, 2> tri{0, 1};
  switch (l) {
  case Lattice::square: return sq;
  case Lattice::king: return king;
  case Lattice::triangular: return tri;
  }
  return sq;
}

inline long overlap(long a0, long a1, long b0, long b1) { return std::max(0L, std::min(a1, b1) - std::max(a0, b0) + 1); }

// Calls f(i, j, dy, count) for each run i in column x, run j in column x + 1 and shift dy with
// count > 0 cells of run i landing in run j.
template <class F> void for_cross_contacts(const std::vector<CellRun> &runs, Lattice l, F f) {
  const auto dys = cross_column_dy(l);
  const long lo = *std::min_element(dys.begin(), dys.end()), hi = *std::max_element(dys.begin(), dys.end());
  std::size_t i = 0;
  while (i < runs.size()) {
    std::size_t ie = i;
    while (ie < runs.size() && runs[ie].x == runs[i].x)
      ++ie;
    std::size_t j = ie, je = ie;
    while (je < runs.size() && runs[je].x == runs[i].x + 1)
      ++je;
    // Both columns are sorted by y; sweep them together.
    std::size_t jj = j;
    for (std::size_t a = i; a < ie; ++a) {
      while (jj < je && runs[jj].y1 < runs[a].y0 + lo)
        ++jj;
      for (std::size_t b = jj; b < je && runs[b].y0 <= runs[a].y1 + hi; ++b)
        for (long dy : dys)
          if (const long c = overlap(runs[a].y0 + dy, runs[a].y1 + dy, runs[b].y0, runs[b].y1))
            f(a, b, dy, c);
    }
    i = ie;
  }
}

} // namespace detail

/// Nonempty, lattice-connected set of cells.
class CellCluster {
public:
  CellCluster(Lattice lattice, std::vector<Cell> cells) : lattice_(lattice), cells_(std::move(cells)) {
    if (cells_.empty())
      throw ParameterError("cluster must be nonempty");
    if (!std::is_sorted(cells_.begin(), cells_.end()))
      std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
      throw ParameterError("duplicate cell in cluster");
    for (const Cell &c : cells_)
      if (!runs_.empty() && runs_.back().x == c.x && runs_.back().y1 + 1 == c.y)
        runs_.back().y1 = c.y;
      else
        runs_.push_back({c.x, c.y, c.y});
    if (!connected())
      throw ParameterError(std::string("cluster is not connected in the ") + lattice_name(lattice_) + " lattice");
  }

  Lattice lattice() const noexcept { return lattice_; }
  /// Sorted by (x, y).
  const std::vector<Cell> &cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  /// Vertical runs in (x, y0) order.
  const std::vector<CellRun> &runs() const noexcept { return runs_; }

private:
  bool connected() const {
    std::vector<std::size_t> parent(runs_.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
      parent[i] = i;
    auto root = [&](std::size_t i) {
      while (parent[i] != i)
        i = parent[i] = parent[parent[i]];
      return i;
    };
    std::size_t components = runs_.size();
    detail::for_cross_contacts(runs_, lattice_, [&](std::size_t a, std::size_t b, long, long) {
      const std::size_t ra = root(a), rb = root(b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    });
    return components == 1;
  }

  Lattice lattice_;
  std::vector<Cell> cells_;
  std::vector<CellRun> runs_;
};

/// Adjacent cell pairs under the cluster's lattice.
inline std::size_t adjacency_count(const CellCluster &c) {
  std::size_t count = c.size() - c.runs().size(); // within runs
  detail::for_cross_contacts(c.runs(), c.lattice(),
                             [&](std::size_t, std::size_t, long, long k) { count += static_cast<std::size_t>(k); });
  return count;
}

// ---------------------------------------------------------------------------
// Closed-form maxima, floors taken with integer square roots.

inline std::uint64_t isqrt(std::uint64_t m) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m)));
  while (r * r > m)
    --r;
  while ((r + 1) * (r + 1) <= m)
    ++r;
  return r;
}

inline std::uint64_t ceil_sqrt(std::uint64_t m) {
  const std::uint64_t r = isqrt(m);
  return r * r == m ? r : r + 1;
}

/// floor(a*n - sqrt(m)) = a*n - ceil(sqrt(m)).
inline std::uint64_t max_square_adjacency(std::uint64_t n) { return 2 * n - ceil_sqrt(4 * n); }
inline std::uint64_t max_king_adjacency(std::uint64_t n) { return 4 * n - ceil_sqrt(28 * n - 12); }
inline std::uint64_t max_triangular_adjacency(std::uint64_t n) { return 3 * n - ceil_sqrt(12 * n - 3); }

inline std::uint64_t max_adjacency(Lattice l, std::uint64_t n) {
  if (n == 0)
    throw DomainError("n must be >= 1");
  switch (l) {
  case Lattice::square: return max_square_adjacency(n);
  case Lattice::king: return max_king_adjacency(n);
  case Lattice::triangular: return max_triangular_adjacency(n);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

// Row-filled a-column rectangle with a partial last row: its square adjacency.
inline std::uint64_t rowfill_square_count(std::uint64_t n, std::uint64_t a) {
  const std::uint64_t r = n / a, p = n % a;
  std::uint64_t h = r * (a - 1) + (p ? p - 1 : 0);
  std::uint64_t v = r ? a * (r - 1) + p : 0;
  return h + v;
}

// Emitted in (x, y) order.
inline std::vector<Cell> rowfill(std::size_t n, std::size_t a) {
  std::vector<Cell> out;
  out.reserve(n);
  const std::size_t r = n / a, p = n % a;
  for (std::size_t x = 0; x < a; ++x)
    for (std::size_t y = 0; y < r + (x < p ? 1 : 0); ++y)
      out.push_back({static_cast<long>(x), static_cast<long>(y)});
  return out;
}

inline std::vector<Cell> square_candidate(std::size_t n) {
  std::size_t best_a = 1;
  std::uint64_t best = 0;
  for (std::size_t a = 1; a <= n; ++a) {
    const auto v = rowfill_square_count(n, a);
    if (v > best) {
      best = v;
      best_a = a;
    }
  }
  return rowfill(n, best_a);
}

// Hexagonal spiral in axial coordinates: ring k starts after k*(-1,-1) and walks k steps
// along each of the six directions, ending back on its start.
inline std::vector<Cell> triangular_candidate(std::size_t n) {
  static constexpr std::array<Cell, 6> dirs{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
  std::vector<Cell> cells{{0, 0}};
  cells.reserve(n + 6 * (static_cast<std::size_t>(std::sqrt(static_cast<double>(n))) + 2));
  for (long k = 1; cells.size() < n; ++k) {
    Cell c{-k, -k};
    for (const Cell &d : dirs)
      for (long s = 0; s < k; ++s) {
        c = {c.x + d.x, c.y + d.y};
        cells.push_back(c);
      }
  }
  cells.resize(n);
  return cells;
}

// King lattice: dynamic programme over stacks of row intervals. best(m, w) is the largest
// adjacency of m cells whose top row has width w; consecutive rows change width by at most
// 4 and shift their start by at most 2.
class KingTable {
public:
  static constexpr int kMaxDw = 4;
  static constexpr int kMaxShift = 2;

  void ensure(std::size_t n) {
    if (n <= n_)
      return;
    const std::size_t N = std::max(n, 2 * n_);
    const std::size_t W = width_cap(N);
    n_ = N;
    W_ = W;
    val_.assign((N + 1) * (W + 1), kNone);
    prev_w_.assign((N + 1) * (W + 1), 0);
    prev_shift_.assign((N + 1) * (W + 1), 0);
    between_.assign((W + 1) * kSpan * kShifts, 0);
    for (std::size_t w = 1; w <= W; ++w)
      for (int dw = -kMaxDw; dw <= kMaxDw; ++dw)
        for (int d = -kMaxShift; d <= kMaxShift; ++d)
          if (static_cast<long>(w) + dw >= 1)
            between_[bidx(w, dw, d)] = between(static_cast<long>(w), static_cast<long>(w) + dw, d);
    for (std::size_t w = 1; w <= std::min(W, N); ++w)
      at(w, w) = static_cast<long>(w) - 1;
    for (std::size_t m = 1; m <= N; ++m) {
      for (std::size_t w = 1; w <= W; ++w) {
        const long v = at(m, w);
        if (v == kNone)
          continue;
        const std::size_t lo = w > kMaxDw ? w - kMaxDw : 1, hi = std::min(W, w + kMaxDw);
        for (std::size_t w2 = lo; w2 <= hi && m + w2 <= N; ++w2) {
          for (int d = -kMaxShift; d <= kMaxShift; ++d) {
            const long b = between_[bidx(w, static_cast<int>(w2) - static_cast<int>(w), d)];
            if (b == 0)
              continue;
            const long nv = v + static_cast<long>(w2) - 1 + b;
            if (nv > at(m + w2, w2)) {
              at(m + w2, w2) = nv;
              prev_w_[idx(m + w2, w2)] = static_cast<std::uint16_t>(w);
              prev_shift_[idx(m + w2, w2)] = static_cast<std::int8_t>(d);
            }
          }
        }
      }
    }
  }

  std::vector<Cell> build(std::size_t n) {
    ensure(n);
    std::size_t w = 1;
    long best = kNone;
    for (std::size_t c = 1; c <= W_; ++c)
      if (at(n, c) > best) {
        best = at(n, c);
        w = c;
      }
    // Walk back to the first row, recording widths and shifts, then lay rows out bottom-up.
    std::vector<std::pair<std::size_t, int>> rows; // (width, shift relative to the row below)
    std::size_t m = n;
    while (true) {
      const std::size_t pw = prev_w_[idx(m, w)];
      if (pw == 0) {
        rows.push_back({w, 0});
        break;
      }
      rows.push_back({w, prev_shift_[idx(m, w)]});
      m -= w;
      w = pw;
    }
    std::reverse(rows.begin(), rows.end());
    std::vector<Cell> out;
    out.reserve(n);
    long start = 0;
    for (std::size_t y = 0; y < rows.size(); ++y) {
      start += rows[y].second;
      for (std::size_t x = 0; x < rows[y].first; ++x)
        out.push_back({start + static_cast<long>(x), static_cast<long>(y)});
    }
    return out;
  }

private:
  static constexpr long kNone = std::numeric_limits<long>::min();
  static constexpr std::size_t kSpan = 2 * kMaxDw + 1;
  static constexpr std::size_t kShifts = 2 * kMaxShift + 1;

  static std::size_t width_cap(std::size_t n) { return 2 * static_cast<std::size_t>(ceil_sqrt(n)) + 4; }

  // King adjacencies between a row [0, w) and the row above it, [d, d + w2).
  static long between(long w, long w2, long d) {
    long total = 0;
    for (long x = d; x < d + w2; ++x)
      total += std::max(0L, std::min(x + 1, w - 1) - std::max(x - 1, 0L) + 1);
    return total;
  }

  std::size_t idx(std::size_t m, std::size_t w) const { return m * (W_ + 1) + w; }
  long &at(std::size_t m, std::size_t w) { return val_[idx(m, w)]; }
  std::size_t bidx(std::size_t w, int dw, int d) const {
    return (w * kSpan + static_cast<std::size_t>(dw + kMaxDw)) * kShifts + static_cast<std::size_t>(d + kMaxShift);
  }

  std::size_t n_ = 0, W_ = 0;
  std::vector<long> val_;
  std::vector<std::uint16_t> prev_w_;
  std::vector<std::int8_t> prev_shift_;
  std::vector<long> between_;
};

inline std::vector<Cell> king_candidate(std::size_t n) {
  static std::mutex mu;
  static KingTable table;
  std::lock_guard lock(mu);
  return table.build(n);
}

} // namespace detail

/// Cluster of n cells attaining the lattice's closed-form maximum adjacency. Square: best
/// row-filled rectangle. Triangular: hexagonal spiral. King: best stack of row intervals.
/// A shortfall is reported as ConstructionGap rather than returned.
inline CellCluster optimal_cluster(Lattice lattice, std::size_t n) {
  if (n == 0)
    throw DomainError("optimal_cluster needs n >= 1");
  std::vector<Cell> cells;
  switch (lattice) {
  case Lattice::square: cells = detail::square_candidate(n); break;
  case Lattice::king: cells = detail::king_candidate(n); break;
  case Lattice::triangular: cells = detail::triangular_candidate(n); break;
  }
  CellCluster out(lattice, std::move(cells));
  const auto got = adjacency_count(out), want = max_adjacency(lattice, n);
  if (got != want)
    throw ConstructionGap(std::string(lattice_name(lattice)) + " cluster of " + std::to_string(n) + " cells has " +
                          std::to_string(got) + " adjacencies, expected " + std::to_string(want));
  return out;
}

/// Places P2 so that the leftmost cell of its top row lands on the rightmost cell of P1's
/// bottom row, and returns the union (n1 + n2 - 1 cells).
inline CellCluster merge_clusters(const CellCluster &p1, const CellCluster &p2) {
  if (p1.lattice() != Lattice::square || p2.lattice() != Lattice::square)
    throw PreconditionError("merge_clusters takes square-lattice clusters");
  auto by_row = [](const std::vector<Cell> &cs, bool top) {
    long y = cs.front().y;
    for (const Cell &c : cs)
      y = top ? std::max(y, c.y) : std::min(y, c.y);
    return y;
  };
  const long y1 = by_row(p1.cells(), false), y2 = by_row(p2.cells(), true);
  long right = std::numeric_limits<long>::min(), left = std::numeric_limits<long>::max();
  for (const Cell &c : p1.cells())
    if (c.y == y1)
      right = std::max(right, c.x);
  for (const Cell &c : p2.cells())
    if (c.y == y2)
      left = std::min(left, c.x);
  const long dx = right - left, dy = y1 - y2;
  std::vector<Cell> cells(p1.cells());
  for (const Cell &c : p2.cells()) {
    Cell t{c.x + dx, c.y + dy};
    if (!(t.x == right && t.y == y1))
      cells.push_back(t);
  }
  return CellCluster(Lattice::square, std::move(cells));
}

/// "x y" per line; '#' comments.
inline std::vector<Cell> parse_cells(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Cell> out;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    Cell c;
    std::string extra;
    if (!(ls >> c.x >> c.y) || (ls >> extra))
      throw ParseError("expected 'x y'", line_no);
    out.push_back(c);
  }
  return out;
}

inline std::string format_cells(const CellCluster &c) {
  std::string out;
  for (const Cell &cell : c.cells())
    out += std::to_string(cell.x) + " " + std::to_string(cell.y) + "\n";
  return out;
}

} // namespace seppack

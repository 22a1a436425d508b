#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "seppack/planar/packing.hpp"

namespace seppack::planar {

struct BoundaryAnalysis {
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t v = 0;           // distinct vertices on the outer boundary walk
  std::size_t v2 = 0, v3 = 0, v4 = 0;
  std::vector<std::size_t> walk; // closed walk, first vertex not repeated at the end
  bool angle_sum_holds = false;  // v2 + 2 v3 + 3 v4 <= 2v - 4
  bool edge_bound_holds = false; // 2e <= 4n - 4 - v
};

namespace detail {

// Counterclockwise angle class of d measured from reference r, in (0, 2pi]:
// 0 = (0, pi), 1 = pi, 2 = (pi, 2pi), 3 = 2pi (same direction as r).
inline int turn_class(const Point &r, const Point &d) {
  const Rational c = cross(r, d);
  if (c > 0)
    return 0;
  if (c < 0)
    return 2;
  return dot(r, d) < 0 ? 1 : 3;
}

// True if d1 comes strictly before d2 when sweeping counterclockwise from r.
inline bool ccw_before(const Point &r, const Point &d1, const Point &d2) {
  const int a = turn_class(r, d1), b = turn_class(r, d2);
  if (a != b)
    return a < b;
  if (a == 0 || a == 2)
    return cross(d1, d2) > 0;
  return false;
}

} // namespace detail

/// Walks the outer face of the straight-line contact graph (centres as vertices) and evaluates
/// v2 + 2 v3 + 3 v4 <= 2v - 4 and 2e <= 4n - 4 - v over the walk's vertices.
inline BoundaryAnalysis boundary_analysis(const PlanarPacking &P) {
  if (P.body().is_parallelogram())
    throw PreconditionError("contact graphs of parallelogram packings need not be plane; boundary_analysis skips them");
  if (P.size() < 3)
    throw DomainError("boundary_analysis needs n >= 3");
  const ContactGraph g = contact_graph(P);
  if (!g.connected())
    throw DomainError("contact graph is disconnected");
  const auto adj = g.adjacency();
  const auto deg = g.degrees();
  const auto &c = P.centers();

  // Lowest, then leftmost, centre.
  std::size_t s = 0;
  for (std::size_t i = 1; i < P.size(); ++i)
    if (c[i].y < c[s].y || (c[i].y == c[s].y && c[i].x < c[s].x))
      s = i;

  auto next_from = [&](std::size_t v, const Point &back) {
    std::size_t best = adj[v].front();
    for (std::size_t w : adj[v])
      if (detail::ccw_before(back, c[w] - c[v], c[best] - c[v]))
        best = w;
    return best;
  };

  BoundaryAnalysis out;
  out.n = P.size();
  out.e = g.edges.size();
  const std::size_t first = next_from(s, pt(0, -1));
  std::size_t prev = s, cur = first;
  out.walk.push_back(s);
  for (std::size_t guard = 0; guard <= 2 * out.e + 2; ++guard) {
    const std::size_t nxt = next_from(cur, c[prev] - c[cur]);
    if (cur == s && nxt == first)
      break;
    out.walk.push_back(cur);
    prev = cur;
    cur = nxt;
  }
  if (out.walk.size() > 2 * out.e + 1)
    throw InternalError("outer face walk did not close");

  std::set<std::size_t> on(out.walk.begin(), out.walk.end());
  out.v = on.size();
  for (std::size_t x : on) {
    if (deg[x] == 2)
      ++out.v2;
    else if (deg[x] == 3)
      ++out.v3;
    else if (deg[x] == 4)
      ++out.v4;
  }
  const long lhs1 = static_cast<long>(out.v2 + 2 * out.v3 + 3 * out.v4), rhs1 = 2 * static_cast<long>(out.v) - 4;
  out.angle_sum_holds = lhs1 <= rhs1;
  out.edge_bound_holds = 2 * static_cast<long>(out.e) <= 4 * static_cast<long>(out.n) - 4 - static_cast<long>(out.v);
  return out;
}

} // namespace seppack::planar

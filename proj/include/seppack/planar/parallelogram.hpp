#pragma once

#include <array>
#include <optional>

#include "seppack/planar/polygon.hpp"

namespace seppack::planar {

struct CircumscribedParallelogram {
  std::size_t edge_k = 0, edge_l = 0; // body edges whose lines carry two adjacent sides
  std::array<Point, 4> corners;       // counterclockwise
  std::array<Point, 4> midpoints;     // p1, p2, -p1, -p2; p_i lies on side i
  Rational area;
};

namespace detail {

// Solves n1 . x = c1, n2 . x = c2.
inline Point solve2(const Point &n1, const Rational &c1, const Point &n2, const Rational &c2) {
  const Rational det = cross(n1, n2);
  if (det == 0)
    throw InternalError("parallel normals in solve2");
  return {Rational((c1 * n2.y - c2 * n1.y) / det), Rational((n1.x * c2 - n2.x * c1) / det)};
}

} // namespace detail

/// Minimum-area parallelogram containing K. For a fixed side direction the area is monotone
/// between consecutive edge normals of K, so only pairs of edge normals need to be tried.
/// Ties keep the first pair in (k, l) order.
inline CircumscribedParallelogram min_area_circumscribed_parallelogram(const SymmetricPolygon &K) {
  const std::size_t m = K.half();
  std::optional<CircumscribedParallelogram> best;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k + 1; l < m; ++l) {
      const Edge &ek = K.edge(k), &el = K.edge(l);
      const Rational det = cross(ek.normal, el.normal);
      if (det == 0)
        continue;
      Rational area = 4 * ek.offset * el.offset / (det < 0 ? Rational(-det) : det);
      if (best && !(area < best->area))
        continue;
      CircumscribedParallelogram cp;
      cp.edge_k = k;
      cp.edge_l = l;
      cp.area = area;
      const Point p1 = detail::solve2(ek.normal, ek.offset, el.normal, Rational(0));
      const Point p2 = detail::solve2(el.normal, el.offset, ek.normal, Rational(0));
      cp.midpoints = {p1, p2, -p1, -p2};
      const Point c = p1 + p2, d = p2 - p1;
      cp.corners = {c, d, -c, -d};
      if (cross(p1, p2) < 0)
        cp.corners = {Point(p1 - p2), -c, Point(p2 - p1), c};
      best = cp;
    }
  }
  if (!best)
    throw InternalError("no pair of independent edge normals");
  for (const Point &mp : best->midpoints)
    if (K.gauge(mp) != 1)
      throw InternalError("parallelogram midpoint " + to_string(mp) + " is not on the boundary");
  return *best;
}

} // namespace seppack::planar

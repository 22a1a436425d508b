#pragma once

// Random configurations and vertex-based rechecks for the planar suites.

#include <random>
#include <vector>

#include "seppack/planar.hpp"

namespace testing_planar {

using namespace seppack;
using namespace seppack::planar;

// Boundary point of K on a random edge at t = a/den.
inline Point random_boundary_point(const SymmetricPolygon &K, std::mt19937_64 &rng, long den) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, K.size() - 1)(rng);
  const long a = std::uniform_int_distribution<long>(0, den - 1)(rng);
  const Edge &e = K.edge(k);
  return e.a + Rational(a, den) * (e.b - e.a);
}

// p on the closed segment [a, b].
inline bool on_segment(const Point &a, const Point &b, const Point &p) {
  if (orient(a, b, p) != 0)
    return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Vertex-based membership: strictly inside / on the boundary of K.
inline bool strictly_inside(const SymmetricPolygon &K, const Point &p) {
  for (std::size_t i = 0; i < K.size(); ++i)
    if (orient(K.vertex(i), K.vertex(i + 1), p) <= 0)
      return false;
  return true;
}
inline bool on_boundary(const SymmetricPolygon &K, const Point &p) {
  for (std::size_t i = 0; i < K.size(); ++i)
    if (on_segment(K.vertex(i), K.vertex(i + 1), p))
      return true;
  return false;
}

// Translates c1 + K and c2 + K touch iff (c2 - c1)/2 is on bd K; overlap iff strictly inside.
inline bool touching(const SymmetricPolygon &K, const Point &c1, const Point &c2) {
  return on_boundary(K, Rational(1, 2) * (c2 - c1));
}

inline std::vector<std::pair<std::size_t, std::size_t>> touching_pairs(const SymmetricPolygon &K,
                                                                       const std::vector<Point> &cs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (touching(K, cs[i], cs[j]))
        out.emplace_back(i, j);
  return out;
}

// Side of translate c + K relative to {n . x = off}: +1 all >=, -1 all <=, 0 crosses.
inline int side(const SymmetricPolygon &K, const Point &c, const Point &n, const Rational &off) {
  bool lo = false, hi = false;
  for (const Point &v : K.vertices()) {
    const Rational s = dot(n, c + v) - off;
    lo = lo || s < 0;
    hi = hi || s > 0;
  }
  return lo && hi ? 0 : (lo ? -1 : 1);
}

// The line separates i from j and misses every interior.
inline bool line_ok(const SymmetricPolygon &K, const std::vector<Point> &cs, std::size_t i, std::size_t j,
                    const Point &n, const Rational &off) {
  if (n.is_zero())
    return false;
  const int si = side(K, cs[i], n, off), sj = side(K, cs[j], n, off);
  if (si == 0 || sj == 0 || si == sj)
    return false;
  for (std::size_t t = 0; t < cs.size(); ++t)
    if (side(K, cs[t], n, off) == 0)
      return false;
  return true;
}

// Grows a packing around the origin translate, keeping it totally separable after each step.
inline std::vector<Point> random_separable_star(const SymmetricPolygon &K, std::mt19937_64 &rng, int attempts,
                                               long den) {
  std::vector<Point> cs{pt(0, 0)};
  for (int a = 0; a < attempts; ++a) {
    const Point base = cs[std::uniform_int_distribution<std::size_t>(0, a % 3 == 0 ? cs.size() - 1 : 0)(rng)];
    const Point c = base + Rational(2) * random_boundary_point(K, rng, den);
    auto next = cs;
    next.push_back(c);
    if (PlanarPacking::find_overlap(K, next))
      continue;
    if (verify_total_separability(PlanarPacking(K, next)).separable)
      cs = std::move(next);
  }
  return cs;
}

} // namespace testing_planar

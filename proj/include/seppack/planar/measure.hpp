#pragma once

#include <algorithm>
#include <vector>

#include "seppack/planar/polygon.hpp"
#include "seppack/planar/separability.hpp"

namespace seppack::planar {

/// Point of bd K as (edge, t): edge.a + t (edge.b - edge.a), 0 <= t < 1.
struct BoundaryPosition {
  std::size_t edge = 0;
  Rational t;
  friend bool operator==(const BoundaryPosition &a, const BoundaryPosition &b) { return a.edge == b.edge && a.t == b.t; }
};

/// Piece of an edge [t0, t1] carrying mass `rate` per unit of t.
struct MeasurePiece {
  Rational t0, t1, rate;
};

/// Sub-arc of one edge, [t0, t1] in that edge's parameter.
struct EdgeArc {
  std::size_t edge = 0;
  Rational t0, t1;
};

/// Atom-free, origin-symmetric measure on bd K in units of pi (total mass 2). Mass is piecewise
/// uniform in the affine edge parameter.
class AngularMeasure {
public:
  AngularMeasure(SymmetricPolygon body, std::vector<std::vector<MeasurePiece>> pieces, std::vector<EdgeArc> zero_arcs)
      : body_(std::move(body)), pieces_(std::move(pieces)), zero_arcs_(std::move(zero_arcs)) {
    if (pieces_.size() != body_.size())
      throw ParameterError("one piece list per edge required");
    for (auto &list : pieces_)
      for (const auto &pc : list)
        if (pc.t0 < 0 || pc.t1 > 1 || pc.t0 > pc.t1 || pc.rate < 0)
          throw ParameterError("invalid measure piece");
  }

  const SymmetricPolygon &body() const noexcept { return body_; }
  const std::vector<std::vector<MeasurePiece>> &pieces() const noexcept { return pieces_; }
  /// Arcs required to carry no mass (empty for the uniform measure).
  const std::vector<EdgeArc> &zero_arcs() const noexcept { return zero_arcs_; }

  /// Mass of [t0, t1] on one edge.
  Rational edge_mass(std::size_t edge, const Rational &t0, const Rational &t1) const {
    Rational total = 0;
    for (const auto &pc : pieces_[edge % pieces_.size()]) {
      const Rational lo = std::max(pc.t0, t0), hi = std::min(pc.t1, t1);
      if (hi > lo)
        total += pc.rate * (hi - lo);
    }
    return total;
  }

  Rational total_mass() const {
    Rational total = 0;
    for (std::size_t k = 0; k < pieces_.size(); ++k)
      total += edge_mass(k, Rational(0), Rational(1));
    return total;
  }

  /// Mass of the counterclockwise arc from P to Q (empty when P = Q).
  Rational ccw_mass(const BoundaryPosition &P, const BoundaryPosition &Q) const {
    if (P.edge == Q.edge && P.t <= Q.t)
      return edge_mass(P.edge, P.t, Q.t);
    const std::size_t n = pieces_.size();
    Rational total = edge_mass(P.edge, P.t, Rational(1));
    for (std::size_t k = (P.edge + 1) % n; k != Q.edge; k = (k + 1) % n)
      total += edge_mass(k, Rational(0), Rational(1));
    total += edge_mass(Q.edge, Rational(0), Q.t);
    return total;
  }

  BoundaryPosition position(const Point &p) const {
    if (body_.gauge(p) != 1)
      throw DomainError("point " + to_string(p) + " is not on the boundary");
    auto [k, t] = body_.locate(p);
    return {k, t};
  }

  /// Counterclockwise distance from P to Q in edge-parameter units, in [0, size()).
  Rational ccw_offset(const BoundaryPosition &P, const BoundaryPosition &Q) const {
    const std::size_t n = pieces_.size();
    const std::size_t steps = (Q.edge + n - P.edge) % n;
    Rational off = Rational(static_cast<long>(steps)) + Q.t - P.t;
    if (off < 0)
      off += static_cast<long>(n);
    return off;
  }

private:
  SymmetricPolygon body_;
  std::vector<std::vector<MeasurePiece>> pieces_;
  std::vector<EdgeArc> zero_arcs_;
};

namespace detail {

// Spreads mass 2 over the given support, uniformly per unit of gauge length.
inline AngularMeasure spread(const SymmetricPolygon &K, const std::vector<std::vector<std::pair<Rational, Rational>>> &support,
                             std::vector<EdgeArc> zero_arcs) {
  Rational L = 0;
  for (std::size_t k = 0; k < K.size(); ++k)
    for (const auto &[a, b] : support[k])
      L += K.edge_gauge_length(k) * (b - a);
  if (L == 0)
    throw InternalError("measure support is empty");
  std::vector<std::vector<MeasurePiece>> pieces(K.size());
  for (std::size_t k = 0; k < K.size(); ++k)
    for (const auto &[a, b] : support[k])
      pieces[k].push_back({a, b, Rational(2 * K.edge_gauge_length(k) / L)});
  return AngularMeasure(K, std::move(pieces), std::move(zero_arcs));
}

} // namespace detail

/// Mass 2 spread uniformly over the boundary by gauge length.
inline AngularMeasure build_uniform_measure(const SymmetricPolygon &K) {
  std::vector<std::vector<std::pair<Rational, Rational>>> support(K.size(), {{Rational(0), Rational(1)}});
  return detail::spread(K, support, {});
}

/// pi-measure: for every edge [a, b] of gauge length g > 1, no mass within gauge distance
/// g - 1 of either endpoint (t in [0, 1 - 1/g] and [1/g, 1]) and none on the two neighbouring
/// edges. The remaining boundary gets mass 2 uniformly by gauge length.
inline AngularMeasure build_pi_measure(const SymmetricPolygon &K) {
  if (is_quasi_hexagon(K).quasi_hexagon)
    throw DomainError("pi-measures are defined only for bodies that are not quasi hexagons");
  const std::size_t n = K.size();
  std::vector<char> dead(n, 0);
  std::vector<std::optional<Rational>> long_edge(n);
  std::vector<EdgeArc> zero;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational g = K.edge_gauge_length(k);
    if (g <= 1)
      continue;
    const Rational inv = 1 / g;
    long_edge[k] = inv;
    zero.push_back({k, Rational(0), Rational(1 - inv)});
    zero.push_back({k, inv, Rational(1)});
    const std::size_t prev = (k + n - 1) % n, next = (k + 1) % n;
    dead[prev] = dead[next] = 1;
    zero.push_back({prev, Rational(0), Rational(1)});
    zero.push_back({next, Rational(0), Rational(1)});
  }
  std::vector<std::vector<std::pair<Rational, Rational>>> support(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (dead[k])
      continue;
    if (long_edge[k])
      support[k].push_back({Rational(1 - *long_edge[k]), *long_edge[k]});
    else
      support[k].push_back({Rational(0), Rational(1)});
  }
  return detail::spread(K, support, std::move(zero));
}

enum class ArcDirection { clockwise, minor };

/// Mass of the clockwise arc from p to q, or of the minor arc between them (the one not
/// containing -p). Both points must lie on bd K.
inline Rational arc_measure(const AngularMeasure &mu, const Point &p, const Point &q, ArcDirection dir) {
  const BoundaryPosition P = mu.position(p), Q = mu.position(q);
  if (dir == ArcDirection::clockwise)
    return mu.ccw_mass(Q, P);
  if (q == -p)
    throw DomainError("minor arc between antipodal points is ambiguous");
  const Rational half(static_cast<long>(mu.body().half()));
  if (mu.ccw_offset(P, Q) > half)
    return mu.ccw_mass(Q, P);
  return mu.ccw_mass(P, Q);
}

/// x / gauge(x).
inline Point unit_direction(const SymmetricPolygon &K, const Point &x) {
  if (x.is_zero())
    throw DomainError("direction of the zero vector");
  return Rational(1 / K.gauge(x)) * x;
}

/// Interior angle at vertex v of a counterclockwise polygon with neighbours u (previous) and
/// w (next): the counterclockwise arc from dir(w - v) to dir(u - v).
inline Rational interior_angle(const AngularMeasure &mu, const Point &u, const Point &v, const Point &w) {
  const auto &K = mu.body();
  return mu.ccw_mass(mu.position(unit_direction(K, w - v)), mu.position(unit_direction(K, u - v)));
}

/// Sum of interior angles of a simple polygon (either orientation).
inline Rational polygon_angle_sum(const AngularMeasure &mu, std::vector<Point> poly) {
  if (poly.size() < 3)
    throw DomainError("polygon needs at least 3 vertices");
  Rational twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  if (twice == 0)
    throw DomainError("degenerate polygon");
  if (twice < 0)
    std::reverse(poly.begin(), poly.end());
  Rational total = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    total += interior_angle(mu, poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]);
  return total;
}

inline Rational triangle_angle_sum(const AngularMeasure &mu, const Point &a, const Point &b, const Point &c) {
  if (orient(a, b, c) == 0)
    throw DomainError("degenerate triangle");
  return polygon_angle_sum(mu, {a, b, c});
}

/// The two four-translate shapes: {0, 2u0, 2u1, 2u2} and {0, 2u0, 2u1, 2(u1 - u2)}.
enum class PiAngleShape { direct, shifted };

struct PiAngleCheck {
  bool passed = false;
  Rational arc; // mass of the clockwise arc from u2 to u0
};

inline std::vector<Point> piangle_centers(const Point &u0, const Point &u1, const Point &u2, PiAngleShape shape) {
  const Rational two(2);
  return {pt(0, 0), two * u0, two * u1, shape == PiAngleShape::direct ? two * u2 : two * (u1 - u2)};
}

/// For a totally separable four-translate configuration with u1 on the clockwise arc from u2
/// to u0, checks that this arc has mass >= 1 (pi).
inline PiAngleCheck lemma_piangle_check(const AngularMeasure &mu, const Point &u0, const Point &u1, const Point &u2,
                                        PiAngleShape shape) {
  const SymmetricPolygon &K = mu.body();
  for (const Point *u : {&u0, &u1, &u2})
    if (K.gauge(*u) != 1)
      throw PreconditionError("contact vector " + to_string(*u) + " is not on the boundary");
  const auto centers = piangle_centers(u0, u1, u2, shape);
  if (auto bad = PlanarPacking::find_overlap(K, centers))
    throw PreconditionError("configuration is not a packing: translates " + std::to_string(bad->first) + " and " +
                            std::to_string(bad->second) + " overlap");
  const PlanarPacking P(K, centers);
  if (!verify_total_separability(P).separable)
    throw PreconditionError("configuration is not totally separable");
  const BoundaryPosition U0 = mu.position(u0), U1 = mu.position(u1), U2 = mu.position(u2);
  // u1 on the clockwise arc from u2 to u0  <=>  on the counterclockwise arc from u0 to u2.
  const Rational o1 = mu.ccw_offset(U0, U1), o2 = mu.ccw_offset(U0, U2);
  if (!(o1 > 0 && o1 < o2))
    throw PreconditionError("u1 is not on the clockwise arc from u2 to u0");
  PiAngleCheck out;
  out.arc = arc_measure(mu, u2, u0, ArcDirection::clockwise);
  out.passed = out.arc >= 1;
  return out;
}

} // namespace seppack::planar

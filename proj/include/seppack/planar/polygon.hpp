#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seppack/errors.hpp"
#include "seppack/rational.hpp"

namespace seppack::planar {

struct Point {
  Rational x;
  Rational y;

  friend Point operator+(const Point &a, const Point &b) { return {Rational(a.x + b.x), Rational(a.y + b.y)}; }
  friend Point operator-(const Point &a, const Point &b) { return {Rational(a.x - b.x), Rational(a.y - b.y)}; }
  friend Point operator*(const Rational &s, const Point &p) { return {Rational(s * p.x), Rational(s * p.y)}; }
  Point operator-() const { return {Rational(-x), Rational(-y)}; }
  friend bool operator==(const Point &a, const Point &b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point &a, const Point &b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
inline Point pt(const Rational &x, const Rational &y) { return {x, y}; }

inline Rational dot(const Point &a, const Point &b) { return Rational(a.x * b.x + a.y * b.y); }
inline Rational cross(const Point &a, const Point &b) { return Rational(a.x * b.y - a.y * b.x); }
inline Rational orient(const Point &o, const Point &a, const Point &b) { return cross(a - o, b - o); }

inline std::string to_string(const Point &p) { return "(" + seppack::to_string(p.x) + ", " + seppack::to_string(p.y) + ")"; }

/// Outward normal and offset of a boundary edge: the edge lies on {x : normal . x = offset}.
struct Edge {
  Point a;
  Point b;
  Point normal; // (b.y - a.y, a.x - b.x)
  Rational offset;
};

/// Origin-symmetric, strictly convex polygon with rational vertices listed counterclockwise.
/// Edge k runs from vertex k to vertex k + 1.
class SymmetricPolygon {
public:
  explicit SymmetricPolygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
    const std::size_t n = v_.size();
    if (n < 4 || n % 2)
      throw ParameterError("a symmetric polygon needs an even number (>= 4) of vertices");
    for (std::size_t i = 0; i < n; ++i) {
      if (orient(v_[i], v_[(i + 1) % n], v_[(i + 2) % n]) <= 0)
        throw ParameterError("vertices are not in strictly convex counterclockwise position at " + to_string(v_[(i + 1) % n]));
      if (!(v_[(i + n / 2) % n] == -v_[i]))
        throw ParameterError("polygon is not symmetric about the origin at " + to_string(v_[i]));
    }
    // Every edge turns counterclockwise about the origin; count crossings of the positive x-axis
    // to rule out vertex lists that wind more than once.
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point &a = v_[i], &b = v_[(i + 1) % n];
      if (cross(a, b) <= 0)
        throw ParameterError("origin is not strictly inside the polygon");
      if (a.y < 0 && b.y >= 0 && a.x + (b.x - a.x) * (-a.y) / (b.y - a.y) > 0)
        ++crossings;
    }
    if (crossings != 1)
      throw ParameterError("vertex list winds more than once");
    for (std::size_t i = 0; i < n; ++i) {
      const Point &a = v_[i], &b = v_[(i + 1) % n];
      Point nrm{Rational(b.y - a.y), Rational(a.x - b.x)};
      e_.push_back({a, b, nrm, dot(nrm, a)});
    }
  }

  std::size_t size() const noexcept { return v_.size(); }
  /// Half the vertex count: vertex i + half() is the antipode of vertex i.
  std::size_t half() const noexcept { return v_.size() / 2; }
  const std::vector<Point> &vertices() const noexcept { return v_; }
  const Point &vertex(std::size_t i) const { return v_[i % v_.size()]; }
  const std::vector<Edge> &edges() const noexcept { return e_; }
  const Edge &edge(std::size_t k) const { return e_[k % e_.size()]; }
  bool is_parallelogram() const noexcept { return v_.size() == 4; }

  /// Minkowski functional: max over edges of (normal . x) / offset.
  Rational gauge(const Point &x) const {
    Rational best = 0;
    for (const Edge &e : e_) {
      Rational r = dot(e.normal, x) / e.offset;
      if (r > best)
        best = r;
    }
    return best;
  }

  /// Support function h(phi) = max over vertices.
  Rational support(const Point &phi) const {
    Rational best = dot(phi, v_[0]);
    for (const Point &v : v_) {
      Rational d = dot(phi, v);
      if (d > best)
        best = d;
    }
    return best;
  }

  /// Gauge length of edge k, i.e. gauge(b - a).
  Rational edge_gauge_length(std::size_t k) const {
    const Edge &e = edge(k);
    return gauge(e.b - e.a);
  }

  /// Index of an edge whose line contains the boundary point p, with p = a + t (b - a).
  /// Vertices resolve to the edge that starts there (t = 0).
  std::pair<std::size_t, Rational> locate(const Point &p) const {
    for (std::size_t k = 0; k < e_.size(); ++k) {
      const Edge &e = e_[k];
      if (dot(e.normal, p) != e.offset)
        continue;
      const Point d = e.b - e.a;
      Rational t = dot(p - e.a, d) / dot(d, d);
      if (t >= 0 && t < 1)
        return {k, t};
    }
    throw DomainError("point " + to_string(p) + " is not on the boundary");
  }

  Rational area() const {
    Rational twice = 0;
    for (std::size_t i = 0; i < v_.size(); ++i)
      twice += cross(v_[i], v_[(i + 1) % v_.size()]);
    return Rational(twice / 2);
  }

  /// Largest Euclidean vertex norm, in floating point (used only for bucketing).
  double radius_bound() const {
    double r = 0;
    for (const Point &v : v_)
      r = std::max(r, std::hypot(to_double(v.x), to_double(v.y)));
    return r;
  }

private:
  std::vector<Point> v_;
  std::vector<Edge> e_;
};

// ---------------------------------------------------------------------------
// Reference bodies

inline SymmetricPolygon square_body() { return SymmetricPolygon({pt(1, -1), pt(1, 1), pt(-1, 1), pt(-1, -1)}); }

/// conv{±(1,0), ±(0,1), ±(1,1)}.
inline SymmetricPolygon hexagon_body() {
  return SymmetricPolygon({pt(1, 0), pt(1, 1), pt(0, 1), pt(-1, 0), pt(-1, -1), pt(0, -1)});
}

/// {(±1,0), (0,±1), (±a,±a)} with a = 70/99, a rational stand-in for 1/sqrt(2).
inline SymmetricPolygon octagon_body() {
  const Rational a(70, 99);
  return SymmetricPolygon({pt(1, 0), pt(a, a), pt(0, 1), pt(-a, a), pt(-1, 0), pt(-a, -a), pt(0, -1), pt(a, -a)});
}

/// Octagon with one opposite pair of long edges (gauge length 3/2) and short neighbours.
inline SymmetricPolygon elongated_octagon_body() {
  const Rational q(1, 4), t(3, 4);
  return SymmetricPolygon({pt(Rational(1), -q), pt(Rational(1), q), pt(t, Rational(1)), pt(-t, Rational(1)),
                           pt(Rational(-1), q), pt(Rational(-1), -q), pt(-t, Rational(-1)), pt(t, Rational(-1))});
}

// ---------------------------------------------------------------------------
// Classification

enum class BodyClass { parallelogram, quasi_hexagon, general };

inline const char *class_name(BodyClass c) {
  switch (c) {
  case BodyClass::parallelogram: return "parallelogram";
  case BodyClass::quasi_hexagon: return "quasi-hex";
  case BodyClass::general: return "general";
  }
  return "?";
}

inline BodyClass parse_body_class(const std::string &s) {
  if (s == "parallelogram")
    return BodyClass::parallelogram;
  if (s == "quasi-hex" || s == "quasi_hexagon" || s == "quasi-hexagon")
    return BodyClass::quasi_hexagon;
  if (s == "general")
    return BodyClass::general;
  throw ParameterError("unknown body class '" + s + "'");
}

struct QuasiHexagonWitness {
  Point a, b, c; // boundary segments [a, b] and [b, c]
  Point u1;      // (b - a), unit gauge
  Point u2;      // (b - c), unit gauge
};

struct QuasiHexagonResult {
  bool quasi_hexagon = false;
  std::optional<QuasiHexagonWitness> witness;
};

/// Two boundary segments of gauge length >= 1 with a common endpoint exist iff some edge has
/// gauge length >= 2 (both inside that edge) or two consecutive edges both reach 1.
inline QuasiHexagonResult is_quasi_hexagon(const SymmetricPolygon &K) {
  const std::size_t n = K.size();
  // Adjacent pair first: it gives the witness used by the generators.
  for (std::size_t k = 0; k < n; ++k) {
    const Rational g1 = K.edge_gauge_length(k), g2 = K.edge_gauge_length(k + 1);
    if (g1 >= 1 && g2 >= 1) {
      const Edge &e1 = K.edge(k), &e2 = K.edge(k + 1);
      const Point b = e1.b;
      const Point a = b - Rational(1 / g1) * (e1.b - e1.a);
      const Point c = b + Rational(1 / g2) * (e2.b - e2.a);
      return {true, QuasiHexagonWitness{a, b, c, b - a, b - c}};
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Rational g = K.edge_gauge_length(k);
    if (g >= 2) {
      const Edge &e = K.edge(k);
      const Point step = Rational(1 / g) * (e.b - e.a);
      const Point a = e.a, b = e.a + step, c = b + step;
      return {true, QuasiHexagonWitness{a, b, c, b - a, b - c}};
    }
  }
  return {false, std::nullopt};
}

inline BodyClass classify(const SymmetricPolygon &K) {
  if (K.is_parallelogram())
    return BodyClass::parallelogram;
  return is_quasi_hexagon(K).quasi_hexagon ? BodyClass::quasi_hexagon : BodyClass::general;
}

} // namespace seppack::planar

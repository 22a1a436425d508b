#pragma once

#include <cstdint>

#include "seppack/planar/packing.hpp"
#include "seppack/planar/parallelogram.hpp"
#include "seppack/polyomino.hpp"

namespace seppack::planar {

/// Closed-form maximum contact number of a totally separable packing of n translates.
inline std::uint64_t csep_formula(BodyClass c, std::uint64_t n) {
  if (n == 0)
    throw DomainError("csep_formula needs n >= 1");
  switch (c) {
  case BodyClass::parallelogram: return max_king_adjacency(n);
  case BodyClass::quasi_hexagon: return max_triangular_adjacency(n);
  case BodyClass::general: return max_square_adjacency(n);
  }
  return 0;
}

/// Lattice basis (w1, w2) with w1, w2, w1 + w2 all of unit gauge, read off a vertex b whose two
/// edges both have gauge length >= 1: w1 = unit step into b along the incoming edge, w2 the
/// same along the outgoing edge reversed, provided b = w1 + w2.
struct TriangularBasis {
  Point w1;
  Point w2;
};

inline std::optional<TriangularBasis> triangular_basis(const SymmetricPolygon &K) {
  const std::size_t n = K.size();
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t in = (v + n - 1) % n; // edge into vertex v
    const Rational g_in = K.edge_gauge_length(in), g_out = K.edge_gauge_length(v);
    if (g_in < 1 || g_out < 1)
      continue;
    const Point &b = K.vertex(v);
    const Point w1 = Rational(1 / g_in) * (b - K.vertex(in));
    const Point w2 = Rational(1 / g_out) * (b - K.vertex(v + 1));
    if (w1 + w2 == b)
      return TriangularBasis{w1, w2};
  }
  return std::nullopt;
}

/// Totally separable packing of n translates realizing csep_formula(classify(K), n):
/// parallelogram -> king-lattice cluster on the side midpoints; quasi hexagon -> triangular
/// cluster on a unit-gauge basis; otherwise square cluster on the midpoints of a minimum-area
/// circumscribed parallelogram.
inline PlanarPacking generate_packing(const SymmetricPolygon &K, std::size_t n) {
  if (n == 0)
    throw DomainError("generate_packing needs n >= 1");
  const BodyClass cls = classify(K);
  Point e1, e2;
  Lattice lattice = Lattice::square;
  switch (cls) {
  case BodyClass::parallelogram:
  case BodyClass::general: {
    const auto cp = min_area_circumscribed_parallelogram(K);
    e1 = cp.midpoints[0];
    e2 = cp.midpoints[1];
    lattice = cls == BodyClass::parallelogram ? Lattice::king : Lattice::square;
    break;
  }
  case BodyClass::quasi_hexagon: {
    auto basis = triangular_basis(K);
    if (!basis)
      throw ConstructionGap("quasi hexagon without a vertex b = w1 + w2; no triangular lattice construction");
    e1 = basis->w2; // axial (1, 0)
    e2 = basis->w1; // axial (0, 1); (1, 1) maps to 2b
    lattice = Lattice::triangular;
    break;
  }
  }
  const CellCluster cluster = optimal_cluster(lattice, n);
  std::vector<Point> centers;
  centers.reserve(n);
  for (const Cell &c : cluster.cells())
    centers.push_back(Rational(2 * c.x) * e1 + Rational(2 * c.y) * e2);
  return PlanarPacking(K, std::move(centers));
}

} // namespace seppack::planar

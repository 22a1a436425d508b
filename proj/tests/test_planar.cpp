#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "planar_helpers.hpp"

using namespace testing_planar;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

std::vector<Point> grid(long w, long h) {
  std::vector<Point> out;
  for (long x = 0; x < w; ++x)
    for (long y = 0; y < h; ++y)
      out.push_back(pt(2 * x, 2 * y));
  return out;
}

} // namespace

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(SymmetricPolygon({pt(1, 0), pt(0, 1), pt(-1, 0)}), ParameterError);
  CHECK_THROWS_AS(SymmetricPolygon({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -2)}), ParameterError);
  // clockwise
  CHECK_THROWS_AS(SymmetricPolygon({pt(1, -1), pt(-1, -1), pt(-1, 1), pt(1, 1)}), ParameterError);
  // collinear middle vertex
  CHECK_THROWS_AS(SymmetricPolygon({pt(1, -1), pt(1, 0), pt(1, 1), pt(-1, 1), pt(-1, 0), pt(-1, -1)}), ParameterError);
}

TEST_CASE("gauge") {
  const auto sq = square_body(), H = hexagon_body();
  CHECK(sq.gauge(pt(2, 0)) == 2);
  CHECK(sq.gauge(pt(1, 1)) == 1);
  CHECK(H.gauge(pt(1, 1)) == 1);
  // Vertex-based oracle on random rational points: gauge 1 iff on the boundary.
  std::mt19937_64 rng(8);
  for (const auto &K : {sq, H, octagon_body(), elongated_octagon_body()}) {
    for (int i = 0; i < 200; ++i) {
      const Point p = random_boundary_point(K, rng, 7);
      CHECK(K.gauge(p) == 1);
      CHECK(on_boundary(K, p));
      const Point inner = q(5, 7) * p, outer = q(8, 7) * p;
      CHECK(strictly_inside(K, inner));
      CHECK(K.gauge(inner) == q(5, 7));
      CHECK(K.gauge(outer) == q(8, 7));
    }
  }
}

TEST_CASE("quasi-hexagon classification") {
  CHECK(is_quasi_hexagon(square_body()).quasi_hexagon);
  CHECK(is_quasi_hexagon(hexagon_body()).quasi_hexagon);
  CHECK_FALSE(is_quasi_hexagon(octagon_body()).quasi_hexagon);
  CHECK_FALSE(is_quasi_hexagon(elongated_octagon_body()).quasi_hexagon);
  CHECK(classify(square_body()) == BodyClass::parallelogram);
  CHECK(classify(hexagon_body()) == BodyClass::quasi_hexagon);
  CHECK(classify(octagon_body()) == BodyClass::general);

  // Brute force: octagon edges all have gauge length < 1.
  const auto O = octagon_body();
  for (std::size_t k = 0; k < O.size(); ++k)
    CHECK(O.edge_gauge_length(k) < 1);

  // Witness segments lie on the boundary and have unit gauge.
  const auto w = is_quasi_hexagon(hexagon_body()).witness;
  REQUIRE(w);
  CHECK(hexagon_body().gauge(w->u1) == 1);
  CHECK(hexagon_body().gauge(w->u2) == 1);
  CHECK(on_boundary(hexagon_body(), w->a));
  CHECK(on_boundary(hexagon_body(), w->b));
  CHECK(on_boundary(hexagon_body(), w->c));

  // An affine image of the hexagon is still a quasi hexagon; a single long edge also counts.
  CHECK(is_quasi_hexagon(SymmetricPolygon({pt(2, 0), pt(3, 1), pt(1, 1), pt(-2, 0), pt(-3, -1), pt(-1, -1)})).quasi_hexagon);
  CHECK(is_quasi_hexagon(SymmetricPolygon({pt(2, -1), pt(3, 0), pt(2, 1), pt(-2, 1), pt(-3, 0), pt(-2, -1)})).quasi_hexagon);
}

TEST_CASE("packings and contact graphs") {
  const auto sq = square_body();
  CHECK(contact_graph(PlanarPacking(sq, {pt(0, 0), pt(2, 0)})).edges.size() == 1);
  CHECK(contact_graph(PlanarPacking(sq, grid(2, 2))).edges.size() == 6);
  CHECK(contact_graph(PlanarPacking(octagon_body(), grid(2, 2))).edges.size() == 4);
  CHECK_THROWS_AS(PlanarPacking(sq, {pt(0, 0), pt(1, 0)}), PackingViolation);
  CHECK_THROWS_AS(PlanarPacking(sq, {pt(0, 0), pt(0, 0)}), PackingViolation);
  try {
    PlanarPacking(sq, {pt(0, 0), pt(5, 0), pt(1, 1)});
    FAIL("overlap not detected");
  } catch (const PackingViolation &e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 2);
  }
}

TEST_CASE("contact graph matches the vertex-based oracle on random packings") {
  std::mt19937_64 rng(31);
  for (const auto &K : {square_body(), hexagon_body(), octagon_body(), elongated_octagon_body()}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Point> cs{pt(0, 0)};
      for (int a = 0; a < 25; ++a) {
        const Point c = cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)] +
                        Rational(2) * random_boundary_point(K, rng, 4);
        bool ok = true;
        for (const auto &d : cs)
          ok = ok && !strictly_inside(K, Rational(1, 2) * (c - d)) && !(c == d);
        if (ok)
          cs.push_back(c);
      }
      REQUIRE_FALSE(PlanarPacking::find_overlap(K, cs));
      auto edges = contact_graph(PlanarPacking(K, cs)).edges;
      std::sort(edges.begin(), edges.end());
      CHECK(edges == touching_pairs(K, cs));
    }
  }
}

TEST_CASE("separability examples") {
  const auto sq = square_body();
  const auto g = grid(2, 2);
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Point> cs;
    for (unsigned b = 0; b < 4; ++b)
      if (mask >> b & 1u)
        cs.push_back(g[b]);
    CHECK(verify_total_separability(PlanarPacking(sq, cs)).separable);
  }

  const auto H = hexagon_body();
  const PlanarPacking tri(H, {pt(0, 0), pt(2, 0), pt(2, 2)});
  const auto r = verify_total_separability(tri);
  CHECK(r.separable);
  CHECK(contact_graph(tri).triangle_count() == 1);

  // Brick pattern: the line between the bottom pair cuts the top square.
  const PlanarPacking brick(sq, {pt(0, 0), pt(2, 0), pt(1, 2)});
  const auto b = verify_total_separability(brick);
  CHECK_FALSE(b.separable);
  REQUIRE(b.blocked.size() == 1);
  CHECK(b.blocked[0].i == 0);
  CHECK(b.blocked[0].j == 1);
  CHECK(b.blocked[0].blocking == std::vector<std::size_t>{2});
}

TEST_CASE("witness lines pass an independent recheck; rejections survive random directions") {
  std::mt19937_64 rng(2718);
  for (const auto &K : {square_body(), hexagon_body(), octagon_body(), elongated_octagon_body()}) {
    int rejected = 0;
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Point> cs{pt(0, 0)};
      for (int a = 0; a < 12; ++a) {
        const Point c = cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)] +
                        Rational(2) * random_boundary_point(K, rng, 3);
        auto next = cs;
        next.push_back(c);
        if (!PlanarPacking::find_overlap(K, next))
          cs = std::move(next);
      }
      const PlanarPacking P(K, cs);
      const auto res = verify_total_separability(P);
      for (const auto &l : res.lines) {
        CHECK(touching(K, cs[l.i], cs[l.j]));
        CHECK(line_ok(K, cs, l.i, l.j, l.normal, l.offset));
      }
      CHECK(res.lines.size() + res.blocked.size() == touching_pairs(K, cs).size());
      CHECK(res.separable == res.blocked.empty());
      for (const auto &bp : res.blocked) {
        ++rejected;
        const Point p = Rational(1, 2) * (cs[bp.i] + cs[bp.j]);
        for (int s = 0; s < 300; ++s) {
          const Point n = pt(std::uniform_int_distribution<long>(-40, 40)(rng),
                             std::uniform_int_distribution<long>(-40, 40)(rng));
          CHECK_FALSE(line_ok(K, cs, bp.i, bp.j, n, dot(n, p)));
        }
        // Edge normals and their sums are the likely candidates; none may work either.
        for (const Edge &e : K.edges())
          for (const Edge &f : K.edges()) {
            const Point n = e.normal + f.normal;
            if (!n.is_zero())
              CHECK_FALSE(line_ok(K, cs, bp.i, bp.j, n, dot(n, p)));
          }
      }
    }
    INFO("rejected pairs seen: " << rejected);
  }
}

TEST_CASE("no triangles in separable packings of non-quasi-hexagons") {
  std::mt19937_64 rng(99);
  for (const auto &K : {octagon_body(), elongated_octagon_body()})
    for (int trial = 0; trial < 40; ++trial) {
      const auto cs = random_separable_star(K, rng, 30, 8);
      const auto g = contact_graph(PlanarPacking(K, cs));
      CHECK(g.triangle_count() == 0);
      CHECK(g.max_degree() <= 4);
    }
}

TEST_CASE("minimum-area circumscribed parallelogram") {
  const auto s = min_area_circumscribed_parallelogram(square_body());
  CHECK(s.area == 4);
  std::vector<Point> mids(s.midpoints.begin(), s.midpoints.end());
  std::sort(mids.begin(), mids.end());
  CHECK(mids == std::vector<Point>{pt(-1, 0), pt(0, -1), pt(0, 1), pt(1, 0)});

  for (const auto &K : {hexagon_body(), octagon_body(), elongated_octagon_body()}) {
    const auto cp = min_area_circumscribed_parallelogram(K);
    for (const auto &m : cp.midpoints)
      CHECK(K.gauge(m) == 1);
    // Every vertex of K lies in the parallelogram (vertex-based check).
    for (const auto &v : K.vertices())
      for (int i = 0; i < 4; ++i)
        CHECK(orient(cp.corners[i], cp.corners[(i + 1) % 4], v) >= 0);
    // Brute force over all edge-normal pairs (area 4 h_k h_l / |det|).
    Rational best = -1;
    for (const Edge &a : K.edges())
      for (const Edge &b : K.edges()) {
        const Rational det = cross(a.normal, b.normal);
        if (det == 0)
          continue;
        const Rational area = 4 * a.offset * b.offset / (det < 0 ? Rational(-det) : det);
        if (best < 0 || area < best)
          best = area;
      }
    CHECK(cp.area == best);
  }
  CHECK(min_area_circumscribed_parallelogram(hexagon_body()).area == 4);
}

TEST_CASE("csep formulas") {
  CHECK(csep_formula(BodyClass::parallelogram, 4) == 6);
  CHECK(csep_formula(BodyClass::quasi_hexagon, 3) == 3);
  CHECK(csep_formula(BodyClass::general, 1) == 0);
  for (long n = 1; n <= 500; ++n) {
    CHECK(static_cast<long>(csep_formula(BodyClass::parallelogram, n)) == oracle::floor_minus_sqrt(4 * n, 28 * n - 12));
    CHECK(static_cast<long>(csep_formula(BodyClass::quasi_hexagon, n)) == oracle::floor_minus_sqrt(3 * n, 12 * n - 3));
    CHECK(static_cast<long>(csep_formula(BodyClass::general, n)) == oracle::floor_minus_sqrt(2 * n, 4 * n));
  }
}

TEST_CASE("generate_packing examples") {
  const auto s4 = generate_packing(square_body(), 4);
  CHECK(contact_graph(s4).edges.size() == 6);
  const auto h3 = generate_packing(hexagon_body(), 3);
  CHECK(contact_graph(h3).edges.size() == 3);
  CHECK(verify_total_separability(h3).separable);
  const auto o4 = generate_packing(octagon_body(), 4);
  CHECK(contact_graph(o4).edges.size() == 4);
  CHECK_THROWS_AS(generate_packing(square_body(), 0), DomainError);

  // A quasi hexagon with no vertex b = w1 + w2: one long edge pair only.
  const SymmetricPolygon long_edge({pt(2, -1), pt(3, 0), pt(2, 1), pt(-2, 1), pt(-3, 0), pt(-2, -1)});
  REQUIRE(classify(long_edge) == BodyClass::quasi_hexagon);
  if (!triangular_basis(long_edge))
    CHECK_THROWS_AS(generate_packing(long_edge, 5), ConstructionGap);
}

TEST_CASE("generated packings: counts, separability, degrees, vertex-based recount") {
  for (const auto &K : {square_body(), hexagon_body(), octagon_body(), elongated_octagon_body()}) {
    const auto cls = classify(K);
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto P = generate_packing(K, n);
      CHECK(P.size() == n);
      const auto pairs = touching_pairs(K, P.centers());
      CHECK(pairs.size() == csep_formula(cls, n));
      CHECK(verify_total_separability(P).separable);
    }
    const std::size_t cap = cls == BodyClass::parallelogram ? 8 : cls == BodyClass::quasi_hexagon ? 6 : 4;
    CHECK(contact_graph(generate_packing(K, 25)).max_degree() == cap);
  }
}

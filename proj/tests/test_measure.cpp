#include <catch_amalgamated.hpp>

#include "planar_helpers.hpp"

using namespace testing_planar;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

struct Named {
  const char *name;
  SymmetricPolygon body;
  AngularMeasure mu;
};

std::vector<Named> measures() {
  std::vector<Named> out;
  out.push_back({"square uniform", square_body(), build_uniform_measure(square_body())});
  out.push_back({"hexagon uniform", hexagon_body(), build_uniform_measure(hexagon_body())});
  out.push_back({"octagon pi", octagon_body(), build_pi_measure(octagon_body())});
  out.push_back({"elongated octagon pi", elongated_octagon_body(), build_pi_measure(elongated_octagon_body())});
  out.push_back({"elongated octagon uniform", elongated_octagon_body(), build_uniform_measure(elongated_octagon_body())});
  return out;
}

std::vector<Point> convex_hull_order(std::vector<Point> p) {
  // Sort around the centroid; used only for 4 points in convex position.
  Point c{0, 0};
  for (const auto &x : p)
    c = c + x;
  c = Rational(1, static_cast<long>(p.size())) * c;
  std::sort(p.begin(), p.end(), [&](const Point &a, const Point &b) {
    const Point u = a - c, v = b - c;
    const bool ua = u.y > 0 || (u.y == 0 && u.x > 0), vb = v.y > 0 || (v.y == 0 && v.x > 0);
    if (ua != vb)
      return ua;
    return cross(u, v) > 0;
  });
  return p;
}

} // namespace

TEST_CASE("measure axioms") {
  std::mt19937_64 rng(4);
  for (const auto &m : measures()) {
    INFO(m.name);
    CHECK(m.mu.total_mass() == 2);
    for (const auto &z : m.mu.zero_arcs())
      CHECK(m.mu.edge_mass(z.edge, z.t0, z.t1) == 0);
    for (int i = 0; i < 100; ++i) {
      const Point p = random_boundary_point(m.body, rng, 9), r = random_boundary_point(m.body, rng, 9);
      const auto P = m.mu.position(p), R = m.mu.position(r);
      CHECK(m.mu.ccw_mass(P, R) == m.mu.ccw_mass(m.mu.position(-p), m.mu.position(-r)));
      CHECK(arc_measure(m.mu, p, -p, ArcDirection::clockwise) == 1);
      if (!(P == R))
        CHECK(m.mu.ccw_mass(P, R) + m.mu.ccw_mass(R, P) == 2);
    }
  }
}

TEST_CASE("pi-measure construction") {
  const auto O = octagon_body();
  const auto mu = build_pi_measure(O);
  CHECK(mu.zero_arcs().empty());
  // Regular octagon: adjacent vertices carry 2 * (edge length / perimeter) = 1/4.
  CHECK(arc_measure(mu, O.vertex(1), O.vertex(0), ArcDirection::clockwise) == q(1, 4));
  CHECK(arc_measure(mu, O.vertex(0), O.vertex(1), ArcDirection::minor) == q(1, 4));

  const auto E = elongated_octagon_body();
  const auto me = build_pi_measure(E);
  CHECK_FALSE(me.zero_arcs().empty());
  for (std::size_t k = 0; k < E.size(); ++k) {
    const Rational g = E.edge_gauge_length(k);
    if (g > 1) {
      // Only the middle part [1 - 1/g, 1/g] carries mass; neighbours carry none.
      CHECK(me.edge_mass(k, Rational(0), Rational(1 - 1 / g)) == 0);
      CHECK(me.edge_mass(k, Rational(1 / g), Rational(1)) == 0);
      CHECK(me.edge_mass(k, Rational(1 - 1 / g), Rational(1 / g)) > 0);
      CHECK(me.edge_mass(k + 1, Rational(0), Rational(1)) == 0);
      CHECK(me.edge_mass(k + E.size() - 1, Rational(0), Rational(1)) == 0);
    }
  }
  CHECK_THROWS_AS(build_pi_measure(square_body()), DomainError);
  CHECK_THROWS_AS(build_pi_measure(hexagon_body()), DomainError);
}

TEST_CASE("angle sums") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> c(-30, 30), d(1, 7);
  for (const auto &m : measures()) {
    INFO(m.name);
    int tri = 0;
    while (tri < 100) {
      const Point a = pt(Rational(c(rng), d(rng)), Rational(c(rng), d(rng)));
      const Point b = pt(Rational(c(rng), d(rng)), Rational(c(rng), d(rng)));
      const Point e = pt(Rational(c(rng), d(rng)), Rational(c(rng), d(rng)));
      if (orient(a, b, e) == 0)
        continue;
      CHECK(triangle_angle_sum(m.mu, a, b, e) == 1);
      ++tri;
    }
    for (int i = 0; i < 30; ++i) {
      // Four boundary points of a scaled body are in convex position.
      std::vector<Point> quad;
      for (int t = 0; t < 4; ++t)
        quad.push_back(Rational(3) * random_boundary_point(m.body, rng, 5) + pt(1, 2));
      std::sort(quad.begin(), quad.end());
      if (std::adjacent_find(quad.begin(), quad.end()) != quad.end())
        continue;
      quad = convex_hull_order(quad);
      bool strictly_convex = true;
      for (int t = 0; t < 4; ++t)
        strictly_convex = strictly_convex && orient(quad[t], quad[(t + 1) % 4], quad[(t + 2) % 4]) > 0;
      if (strictly_convex)
        CHECK(polygon_angle_sum(m.mu, quad) == 2);
    }
  }
  CHECK_THROWS_AS(triangle_angle_sum(measures()[0].mu, pt(0, 0), pt(1, 1), pt(2, 2)), DomainError);
}

TEST_CASE("pi-angle check") {
  const auto O = octagon_body();
  const auto mu = build_pi_measure(O);
  const auto res = lemma_piangle_check(mu, pt(1, 0), pt(0, 1), pt(-1, 0), PiAngleShape::direct);
  CHECK(res.passed);
  CHECK(res.arc == 1);

  // Broken: contacts at (1,0) and a neighbouring vertex overlap each other.
  CHECK_THROWS_AS(lemma_piangle_check(mu, pt(1, 0), O.vertex(1), pt(-1, 0), PiAngleShape::direct), PreconditionError);
  CHECK_THROWS_AS(lemma_piangle_check(mu, pt(2, 0), pt(0, 1), pt(-1, 0), PiAngleShape::direct), PreconditionError);
}

TEST_CASE("boundary analysis") {
  const auto O = octagon_body();
  auto grid = [](long w, long h) {
    std::vector<Point> out;
    for (long x = 0; x < w; ++x)
      for (long y = 0; y < h; ++y)
        out.push_back(pt(2 * x, 2 * y));
    return out;
  };
  const auto b2 = boundary_analysis(PlanarPacking(O, grid(2, 2)));
  CHECK(b2.v == 4);
  CHECK(b2.v2 == 4);
  CHECK(b2.angle_sum_holds);
  CHECK(b2.edge_bound_holds);

  const auto b3 = boundary_analysis(PlanarPacking(O, grid(3, 3)));
  CHECK(b3.e == 12);
  CHECK(b3.v == 8);
  CHECK(2 * b3.e == 4 * 9 - 4 - b3.v);
  CHECK(b3.edge_bound_holds);

  const auto path = boundary_analysis(PlanarPacking(O, {pt(0, 0), pt(2, 0), pt(4, 0)}));
  CHECK(path.v == 3);
  CHECK(path.e == 2);
  CHECK(path.angle_sum_holds);
  CHECK(path.edge_bound_holds);

  CHECK_THROWS_AS(boundary_analysis(PlanarPacking(square_body(), grid(2, 2))), PreconditionError);
  CHECK_THROWS_AS(boundary_analysis(PlanarPacking(O, {pt(0, 0), pt(2, 0), pt(10, 0)})), DomainError);

  // Generated packings of general bodies satisfy both inequalities.
  for (const auto &K : {O, elongated_octagon_body()})
    for (std::size_t n = 3; n <= 40; ++n) {
      const auto r = boundary_analysis(generate_packing(K, n));
      CHECK(r.angle_sum_holds);
      CHECK(r.edge_bound_holds);
    }
}

#include <random>

#include <catch_amalgamated.hpp>

#include "polysolve/hull.hpp"
#include "polysolve/parser.hpp"

using namespace polysolve;

namespace {

bool contains(const std::vector<LatticePoint>& pts, const LatticePoint& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

// shared support of the two plane cubics fixture: monomials x, y, x^2,
// xy, y^2, x^2 y, x y^2; its hull is a hexagon of area 3
std::vector<LatticePoint> hexagon_points() {
  return {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}};
}

}  // namespace

TEST_CASE("unit square") {
  NewtonPolytope P = convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
  CHECK(P.vol == Rational(1));
  CHECK(P.normalized_volume() == 2);
  CHECK(P.vertices.size() == 4);
  CHECK_FALSE(P.degenerate);
}

TEST_CASE("standard simplex dilated by d") {
  for (int dim = 1; dim <= 4; ++dim) {
    for (int d = 1; d <= 3; ++d) {
      std::vector<LatticePoint> pts;
      pts.push_back(LatticePoint(dim, 0));
      for (int i = 0; i < dim; ++i) {
        LatticePoint e(dim, 0);
        e[i] = d;
        pts.push_back(e);
      }
      NewtonPolytope P = convex_hull(pts, dim);
      // normalized volume of d * simplex is d^dim
      long expected = 1;
      for (int k = 0; k < dim; ++k) expected *= d;
      CHECK(P.normalized_volume() == expected);
      CHECK(P.vertices.size() == static_cast<std::size_t>(dim + 1));
    }
  }
}

TEST_CASE("interior and boundary points are not vertices") {
  // square with edge midpoints and center thrown in
  NewtonPolytope P = convex_hull(
      {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}, 2);
  CHECK(P.vol == Rational(4));
  REQUIRE(P.vertices.size() == 4);
  CHECK(contains(P.vertices, {0, 0}));
  CHECK(contains(P.vertices, {2, 2}));
}

TEST_CASE("hexagon from the sparse curve family") {
  NewtonPolytope P = convex_hull(hexagon_points(), 2);
  CHECK(P.normalized_volume() == 6);
  CHECK(P.vol == Rational(3));
  REQUIRE(P.vertices.size() == 6);
  for (const LatticePoint& v :
       std::vector<LatticePoint>{{1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}})
    CHECK(contains(P.vertices, v));
}

TEST_CASE("collinear points give a degenerate hull with exact vertices") {
  NewtonPolytope P = convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}}, 2);
  CHECK(P.degenerate);
  CHECK(P.vol == Rational(0));
  REQUIRE(P.vertices.size() == 2);
  CHECK(contains(P.vertices, {0, 0}));
  CHECK(contains(P.vertices, {3, 3}));
}

TEST_CASE("single point support") {
  NewtonPolytope P = convex_hull({{2, 5}}, 2);
  CHECK(P.degenerate);
  CHECK(P.vertices == std::vector<LatticePoint>{{2, 5}});
}

TEST_CASE("exact membership test") {
  std::vector<LatticePoint> tri = {{0, 0}, {4, 0}, {0, 4}};
  CHECK(geom::in_convex_hull({1, 1}, tri));
  CHECK(geom::in_convex_hull({0, 0}, tri));
  CHECK(geom::in_convex_hull({2, 2}, tri));  // on the edge
  CHECK_FALSE(geom::in_convex_hull({3, 3}, tri));
  CHECK_FALSE(geom::in_convex_hull({5, 0}, tri));
}

TEST_CASE("Minkowski sum with a translate shifts the polytope") {
  NewtonPolytope P = convex_hull(hexagon_points(), 2);
  NewtonPolytope T = convex_hull({{5, 7}}, 2);
  NewtonPolytope S = minkowski_sum(P, T);
  CHECK(S.vol == P.vol);
  REQUIRE(S.vertices.size() == P.vertices.size());
  for (const auto& v : P.vertices) CHECK(contains(S.vertices, {v[0] + 5, v[1] + 7}));
}

TEST_CASE("Minkowski square doubles in each direction") {
  NewtonPolytope P = convex_hull({{0, 0}, {1, 0}, {0, 1}}, 2);
  NewtonPolytope S = minkowski_sum(P, P);
  // 2 * simplex: volume scales by 2^2
  CHECK(S.vol == Rational(4) * P.vol);
}

TEST_CASE("Minkowski sum against a brute-force oracle on random supports") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coord(0, 4), sz(3, 6);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<LatticePoint> A, B;
    int na = sz(rng), nb = sz(rng);
    for (int i = 0; i < na; ++i) A.push_back({coord(rng), coord(rng)});
    for (int i = 0; i < nb; ++i) B.push_back({coord(rng), coord(rng)});
    NewtonPolytope S = minkowski_sum(convex_hull(A, 2), convex_hull(B, 2));
    // oracle: hull of all pairwise sums of raw points
    std::vector<LatticePoint> all;
    for (const auto& a : A)
      for (const auto& b : B) all.push_back({a[0] + b[0], a[1] + b[1]});
    NewtonPolytope O = convex_hull(all, 2);
    CHECK(S.vol == O.vol);
    CHECK(S.degenerate == O.degenerate);
  }
}

TEST_CASE("support extraction from a polynomial") {
  PolyQ f = parse_polynomial("3*x^3*y + x*y^3 + 7", {"x", "y"});
  Support A = Support::of(f);
  CHECK(A.dim == 2);
  REQUIRE(A.points.size() == 3);
  CHECK(contains(A.points, {0, 0}));
  CHECK(contains(A.points, {3, 1}));
  CHECK(contains(A.points, {1, 3}));
  CHECK(normalized_volume(A) == 8);  // triangle (0,0),(3,1),(1,3) has area 4
}

TEST_CASE("dimension cap") {
  std::vector<LatticePoint> pts;
  pts.push_back(LatticePoint(7, 0));
  for (int i = 0; i < 7; ++i) {
    LatticePoint e(7, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  CHECK_THROWS_AS(convex_hull(pts, 7), DimensionCapExceeded);
}

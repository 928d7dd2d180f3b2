#include <random>

#include <catch_amalgamated.hpp>

#include "polysolve/case_studies.hpp"
#include "polysolve/root_counts.hpp"

using namespace polysolve;

TEST_CASE("Bezout bound basics") {
  CHECK(bezout_bound({3, 3}) == 9);
  CHECK(bezout_bound({5}) == 5);
  CHECK(bezout_bound({3, 3, 3, 3}) == 81);
  CHECK_THROWS_AS(bezout_bound({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(bezout_bound(std::vector<int>(40, 10)), std::overflow_error);
}

TEST_CASE("mixed volume of identical supports is the normalized volume") {
  Support hex(2, {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}});
  CHECK(mixed_volume({hex, hex}) == 6);
  CHECK(normalized_volume(hex) == 6);
}

TEST_CASE("sparse pair with Bezout 16 and mixed volume 12") {
  // f = a0 + a1 x^3 y + a2 x y^3, g = b0 + b1 x^2 + b2 y^2 + b3 x^2 y^2
  Support A1(2, {{0, 0}, {3, 1}, {1, 3}});
  Support A2(2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  CHECK(mixed_volume({A1, A2}) == 12);
  CHECK(bezout_bound({4, 4}) == 16);
}

TEST_CASE("mixed volume is symmetric in its arguments") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coord(0, 3), sz(2, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Support> A;
    for (int i = 0; i < 3; ++i) {
      std::vector<LatticePoint> pts = {{0, 0, 0}};
      int n = sz(rng);
      for (int k = 0; k < n; ++k) pts.push_back({coord(rng), coord(rng), coord(rng)});
      A.push_back(Support(3, pts));
    }
    long long base = mixed_volume(A);
    CHECK(mixed_volume({A[1], A[2], A[0]}) == base);
    CHECK(mixed_volume({A[2], A[0], A[1]}) == base);
    CHECK(mixed_volume({A[1], A[0], A[2]}) == base);
  }
}

TEST_CASE("mixed volume is translation invariant") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LatticePoint> a, b;
    for (int k = 0; k < 5; ++k) {
      a.push_back({coord(rng), coord(rng)});
      b.push_back({coord(rng), coord(rng)});
    }
    Support A(2, a), B(2, b);
    std::vector<LatticePoint> a2;
    for (const auto& p : a) a2.push_back({p[0] + 3, p[1] + 1});
    CHECK(mixed_volume({A, B}) == mixed_volume({Support(2, a2), B}));
  }
}

TEST_CASE("two-term inclusion-exclusion agrees with direct volume arithmetic") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(0, 4), sz(2, 6);
  int done = 0;
  while (done < 50) {
    std::vector<LatticePoint> a, b;
    int na = sz(rng), nb = sz(rng);
    for (int k = 0; k < na; ++k) a.push_back({coord(rng), coord(rng)});
    for (int k = 0; k < nb; ++k) b.push_back({coord(rng), coord(rng)});
    Support A(2, a), B(2, b);
    NewtonPolytope PA = convex_hull(A, false), PB = convex_hull(B, false);
    Rational direct = minkowski_sum(PA, PB, false).vol - PA.vol - PB.vol;
    CHECK(Rational(static_cast<long>(mixed_volume({A, B}))) == direct);
    ++done;
  }
}

TEST_CASE("mixed volume with a point support vanishes") {
  Support A(2, {{0, 0}, {2, 0}, {0, 2}});
  Support pt(2, {{3, 3}});
  CHECK(mixed_volume({A, pt}) == 0);
}

TEST_CASE("count report for the plane curves fixture") {
  RootCountReport rep = count_report(plane_curves_system());
  CHECK(rep.bezout == 9);
  REQUIRE(rep.kushnirenko.has_value());
  CHECK(*rep.kushnirenko == 6);
  REQUIRE(rep.bkk.has_value());
  CHECK(*rep.bkk == 6);
  CHECK_FALSE(rep.zero_in_all_supports);
}

TEST_CASE("count report for the two conics") {
  RootCountReport rep = count_report(two_conics_system());
  CHECK(rep.bezout == 4);
  REQUIRE(rep.kushnirenko.has_value());  // both supports are {1, x^2, y^2}
  CHECK(*rep.kushnirenko == 4);
  REQUIRE(rep.bkk.has_value());
  CHECK(*rep.bkk == 4);
  CHECK(rep.zero_in_all_supports);
}

TEST_CASE("count report for the line system on the cubic surface") {
  SystemQ F = clebsch_line_system();
  RootCountReport rep = count_report(F);
  CHECK(rep.bezout == 81);
  REQUIRE(rep.bkk.has_value());
  CHECK(*rep.bkk == 45);
}

TEST_CASE("non-square systems only get the Bezout bound") {
  PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  SystemQ F(2, {x + y});
  RootCountReport rep = count_report(F);
  CHECK(rep.bezout == 1);
  CHECK_FALSE(rep.kushnirenko.has_value());
  CHECK_FALSE(rep.bkk.has_value());
}

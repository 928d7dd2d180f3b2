#include <random>

#include <catch_amalgamated.hpp>

#include "polysolve/case_studies.hpp"
#include "polysolve/homotopy.hpp"
#include "polysolve/macaulay.hpp"

using namespace polysolve;

TEST_CASE("total degree start system and points") {
  SystemC G = total_degree_start({2, 3});
  REQUIRE(G.polys.size() == 2);
  auto pts = total_degree_start_points({2, 3});
  REQUIRE(pts.size() == 6);
  for (const auto& p : pts) {
    std::vector<Complex> v = G.evaluate(p);
    for (const auto& r : v) CHECK(std::abs(r) < 1e-12);
  }
  CHECK_THROWS_AS(total_degree_start_points(std::vector<int>(8, 10)), std::overflow_error);
}

TEST_CASE("homotopy Jacobian matches finite differences") {
  SystemQ Fq = plane_curves_system();
  SystemC F = to_complex(Fq);
  SystemC G = total_degree_start({3, 3});
  Homotopy H(F, G, Complex(0.6, 0.8));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Complex> x = {Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    double t = 0.3 + 0.1 * trial;
    MatrixC J = H.x_jacobian(x, t);
    const double h = 1e-6;
    for (int j = 0; j < 2; ++j) {
      std::vector<Complex> xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      std::vector<Complex> vp = H.value(xp, t), vm = H.value(xm, t);
      for (int i = 0; i < 2; ++i) {
        Complex fd = (vp[i] - vm[i]) / (2 * h);
        CHECK(std::abs(J(i, j) - fd) < 1e-5);
      }
    }
    // t-derivative check
    std::vector<Complex> dp = H.value(x, t + h), dm = H.value(x, t - h);
    std::vector<Complex> dt = H.t_derivative(x);
    for (int i = 0; i < 2; ++i)
      CHECK(std::abs(dt[i] - (dp[i] - dm[i]) / (2 * h)) < 1e-5);
  }
}

TEST_CASE("tracking the trivial homotopy F = G stays put") {
  SystemC G = total_degree_start({2, 2});
  Homotopy H(G, G, Complex(1.0, 0.0));
  for (const auto& s : total_degree_start_points({2, 2})) {
    PathResult r = track_path(H, s);
    REQUIRE(r.status == PathStatus::converged);
    CHECK(point_distance(r.endpoint, s) < 1e-8);
  }
}

TEST_CASE("two circles meet in two real points with a quadratic oracle") {
  // centers (0,0) and (1, 1/2), radii 1: intersection points solve
  // the radical-line substitution exactly
  SystemQ F = robot_circles(Rational(1), Rational(1), Rational(1), rat(1, 2));
  HomotopyResult res = solve_homotopy(F);
  REQUIRE(res.solutions.solutions.size() == 2);
  // oracle: x = (5 - 4y)/8 from subtracting the equations, plug into
  // x^2 + y^2 = 1: 80 y^2 - 40 y - 39 = 0
  for (const auto& sol : res.solutions.solutions) {
    CHECK(sol.is_real);
    double y = sol.point[1].real();
    CHECK(std::abs(80 * y * y - 40 * y - 39) < 1e-6);
    double x = (5 - 4 * y) / 8;
    CHECK(std::abs(sol.point[0].real() - x) < 1e-8);
  }
  CHECK(res.solutions.paths_tracked == 4);
  CHECK(res.solutions.paths_diverged == 2);  // two solutions at infinity
}

TEST_CASE("Wilkinson polynomial of degree 12") {
  SystemQ F(1, {wilkinson(12)});
  HomotopyResult res = solve_homotopy(F);
  REQUIRE(res.solutions.solutions.size() == 12);
  std::vector<double> roots;
  for (const auto& sol : res.solutions.solutions) {
    CHECK(sol.is_real);
    roots.push_back(sol.point[0].real());
  }
  std::sort(roots.begin(), roots.end());
  for (int k = 0; k < 12; ++k) CHECK(std::abs(roots[k] - (k + 1)) <= 1e-6);
}

TEST_CASE("plane curves: nine paths, two divergent, seven finite solutions") {
  SystemQ F = plane_curves_system();
  HomotopyResult res = solve_homotopy(F);
  CHECK(res.solutions.paths_tracked == 9);
  CHECK(res.solutions.paths_diverged == 2);
  REQUIRE(res.solutions.solutions.size() == 7);
  for (const auto& sol : res.solutions.solutions) {
    CHECK(sol.is_real);
    CHECK(sol.residual <= 1e-8);
  }
}

TEST_CASE("tracking is deterministic for a fixed seed") {
  SystemQ F = plane_curves_system();
  TrackerConfig cfg;
  cfg.seed = 4321;
  HomotopyResult a = solve_homotopy(F, cfg);
  HomotopyResult b = solve_homotopy(F, cfg);
  REQUIRE(a.solutions.solutions.size() == b.solutions.solutions.size());
  for (std::size_t i = 0; i < a.solutions.solutions.size(); ++i)
    CHECK(point_distance(a.solutions.solutions[i].point, b.solutions.solutions[i].point) == 0.0);
}

TEST_CASE("trace records a monotone time grid") {
  SystemQ F = two_conics_system();
  TrackerConfig cfg;
  cfg.trace = true;
  HomotopyResult res = solve_homotopy(F, cfg);
  for (const auto& p : res.paths) {
    if (p.status != PathStatus::converged) continue;
    REQUIRE_FALSE(p.trace.empty());
    CHECK(p.trace.front().t == 0.0);
    CHECK(p.trace.back().t == 1.0);
    for (std::size_t i = 1; i < p.trace.size(); ++i) CHECK(p.trace[i].t > p.trace[i - 1].t);
  }
}

TEST_CASE("homotopy and eigen solvers agree on random dense systems") {
  std::mt19937 rng(8675309);
  std::uniform_int_distribution<int> c(-5, 5);
  int done = 0;
  while (done < 25) {
    // dense quadric pairs with small integer coefficients
    PolyQ f(2), g(2);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) {
        f.add_term(Monomial({a, b}), Rational(c(rng)));
        g.add_term(Monomial({a, b}), Rational(c(rng)));
      }
    if (f.degree() != 2 || g.degree() != 2) continue;
    SystemQ F(2, {f, g});
    SolutionSet se;
    HomotopyResult rh;
    try {
      se = solve_eigen(F);
      rh = solve_homotopy(F);
    } catch (const std::exception&) {
      continue;  // degenerate draw (positive-dimensional or unstable)
    }
    if (se.solutions.size() != 4) continue;  // want the generic case
    bool distinct = true;  // multiple roots are also non-generic
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        distinct = distinct &&
                   point_distance(se.solutions[i].point, se.solutions[j].point) > 1e-6;
    if (!distinct) continue;
    REQUIRE(rh.solutions.solutions.size() == 4);
    for (const auto& a : se.solutions) {
      double best = 1e9;
      for (const auto& b : rh.solutions.solutions)
        best = std::min(best, point_distance(a.point, b.point));
      CHECK(best < 1e-6);
    }
    ++done;
  }
}

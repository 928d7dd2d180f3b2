#include <random>

#include <catch_amalgamated.hpp>

#include "polysolve/case_studies.hpp"
#include "polysolve/macaulay.hpp"
#include "polysolve/reports.hpp"

using namespace polysolve;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

std::vector<std::vector<Complex>> sorted_points(const SolutionSet& s) {
  std::vector<std::vector<Complex>> pts;
  for (const auto& sol : s.solutions) pts.push_back(sol.point);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
  });
  return pts;
}

// determinant of x*I - C via exact cofactor expansion over Q[x]
PolyQ charpoly(const MatrixQ& C) {
  int n = C.rows();
  // entries of x*I - C as univariate polynomials
  std::vector<std::vector<PolyQ>> M(n, std::vector<PolyQ>(n, PolyQ::zero(1)));
  PolyQ x = PolyQ::variable(1, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      M[i][j] = -PolyQ::constant(1, C(i, j));
      if (i == j) M[i][j] = M[i][j] + x;
    }
  std::function<PolyQ(std::vector<int>)> det = [&](std::vector<int> rows) -> PolyQ {
    int col = n - static_cast<int>(rows.size());
    if (rows.empty()) return PolyQ::constant(1, Rational(1));
    PolyQ acc = PolyQ::zero(1);
    Rational sign(1);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::vector<int> rest;
      for (std::size_t l = 0; l < rows.size(); ++l)
        if (l != k) rest.push_back(rows[l]);
      acc = acc + sign * M[rows[k]][col] * det(rest);
      sign = -sign;
    }
    return acc;
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return det(all);
}

}  // namespace

TEST_CASE("companion matrix of a quadratic") {
  PolyQ f = parse_polynomial("x^2 - 3*x + 2", {"x"});
  MatrixQ C = companion_matrix(f);
  REQUIRE(C.rows() == 2);
  CHECK(C(0, 0) == Rational(0));
  CHECK(C(1, 0) == Rational(1));
  CHECK(C(0, 1) == Rational(-2));
  CHECK(C(1, 1) == Rational(3));
}

TEST_CASE("companion matrix of x^12 - 1") {
  PolyQ f = parse_polynomial("x^12 - 1", {"x"});
  MatrixQ C = companion_matrix(f);
  REQUIRE(C.rows() == 12);
  CHECK(C(0, 11) == Rational(1));
  for (int i = 1; i < 12; ++i) {
    CHECK(C(i, 11) == Rational(0));
    CHECK(C(i, i - 1) == Rational(1));
  }
  CHECK_THROWS_AS(companion_matrix(PolyQ::constant(1, Rational(2))), std::invalid_argument);
}

TEST_CASE("characteristic polynomial of the companion matrix is f, 20 random cubics") {
  std::mt19937 rng(314);
  std::uniform_int_distribution<int> c(-6, 6), lead(1, 5);
  PolyQ x = PolyQ::variable(1, 0);
  for (int trial = 0; trial < 20; ++trial) {
    PolyQ f = Rational(lead(rng)) * x.pow(3) + Rational(c(rng)) * x.pow(2) +
              Rational(c(rng)) * x + PolyQ::constant(1, Rational(c(rng)));
    Monomial m3(1);
    m3[0] = 3;
    Rational cd = f.coefficient(m3);
    CHECK(charpoly(companion_matrix(f)) == (Rational(1) / cd) * f);
  }
}

TEST_CASE("truncated matrix of the two conics at degree 3") {
  SystemQ F = two_conics_system();
  MonomialOrder order = MonomialOrder::grlex(2);
  MacaulayMatrix<Rational> M = build_macaulay(F, 3, order);
  REQUIRE(M.entries.rows() == 6);
  REQUIRE(M.entries.cols() == 10);
  // rows in display order: f1, x f1, y f1, f2, x f2, y f2
  REQUIRE(M.row_labels[0] == std::make_pair(0, Monomial({0, 0})));
  REQUIRE(M.row_labels[1] == std::make_pair(0, Monomial({1, 0})));
  REQUIRE(M.row_labels[2] == std::make_pair(0, Monomial({0, 1})));
  // columns in grlex-descending order
  std::vector<Monomial> expect_cols = {Monomial({3, 0}), Monomial({2, 1}), Monomial({1, 2}),
                                       Monomial({0, 3}), Monomial({2, 0}), Monomial({1, 1}),
                                       Monomial({0, 2}), Monomial({1, 0}), Monomial({0, 1}),
                                       Monomial({0, 0})};
  CHECK(M.columns == expect_cols);
  // first row reads f1 = x^2 + y^2 - 2
  CHECK(M.entries(0, 4) == Rational(1));
  CHECK(M.entries(0, 6) == Rational(1));
  CHECK(M.entries(0, 9) == Rational(-2));
  // row x*f2 = 3x^3 - xy^2 - 2x
  CHECK(M.entries(4, 0) == Rational(3));
  CHECK(M.entries(4, 2) == Rational(-1));
  CHECK(M.entries(4, 7) == Rational(-2));

  CHECK_THROWS_AS(build_macaulay(F, 1, order), std::invalid_argument);
}

TEST_CASE("reduction of the two-conics matrix selects the expected basis") {
  SystemQ F = two_conics_system();
  MonomialOrder order = MonomialOrder::grlex(2);
  auto [Q, reduced] = reduce_and_select_basis(build_macaulay(F, 3, order));
  REQUIRE(Q.dimension() == 4);
  CHECK(Q.basis == std::vector<Monomial>{Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}),
                                         Monomial({1, 1})});
  // reduced rows represent x^3 - x, x^2 y - y, x y^2 - x, y^3 - y,
  // x^2 - 1, y^2 - 1 (columns in grlex-descending order)
  REQUIRE(reduced.rows() == 6);
  auto row_poly = [&](int r) {
    PolyQ p(2);
    MacaulayMatrix<Rational> M = build_macaulay(F, 3, order);
    for (int j = 0; j < reduced.cols(); ++j) p.add_term(M.columns[j], reduced(r, j));
    return p;
  };
  CHECK(row_poly(0) == parse_polynomial("x^3 - x", kXY));
  CHECK(row_poly(1) == parse_polynomial("x^2*y - y", kXY));
  CHECK(row_poly(2) == parse_polynomial("x*y^2 - x", kXY));
  CHECK(row_poly(3) == parse_polynomial("y^3 - y", kXY));
  CHECK(row_poly(4) == parse_polynomial("x^2 - 1", kXY));
  CHECK(row_poly(5) == parse_polynomial("y^2 - 1", kXY));
}

TEST_CASE("multiplication matrices for the two conics") {
  SystemQ F = two_conics_system();
  MonomialOrder order = MonomialOrder::grlex(2);
  auto [Q, reduced] = reduce_and_select_basis(build_macaulay(F, 3, order));
  MatrixQ Mx = multiplication_matrix(Q, PolyQ::variable(2, 0));
  MatrixQ My = multiplication_matrix(Q, PolyQ::variable(2, 1));
  // in the basis (1, x, y, xy): x*1 = x, x*x = 1, x*y = xy, x*xy = y
  MatrixQ Ex(4, 4), Ey(4, 4);
  Ex(1, 0) = Ex(0, 1) = Ex(3, 2) = Ex(2, 3) = Rational(1);
  Ey(2, 0) = Ey(3, 1) = Ey(0, 2) = Ey(1, 3) = Rational(1);
  CHECK(Mx == Ex);
  CHECK(My == Ey);
  // commutativity and identity
  CHECK(Mx * My == My * Mx);
  CHECK(multiplication_matrix(Q, PolyQ::constant(2, Rational(1))) == MatrixQ::identity(4));
}

TEST_CASE("normal form table is idempotent and kills the generators") {
  SystemQ F = two_conics_system();
  MonomialOrder order = MonomialOrder::grlex(2);
  auto [Q, reduced] = reduce_and_select_basis(build_macaulay(F, 3, order));
  for (std::size_t i = 0; i < Q.basis.size(); ++i) {
    std::vector<Rational> nf = Q.normal_form(Q.basis[i]);
    for (std::size_t j = 0; j < nf.size(); ++j)
      CHECK(nf[j] == (i == j ? Rational(1) : Rational(0)));
  }
  for (const auto& f : F.polys) {
    std::vector<Rational> acc(Q.basis.size(), Rational(0));
    for (const auto& [m, c] : f.terms()) {
      std::vector<Rational> nf = Q.normal_form(m);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += c * nf[j];
    }
    for (const auto& v : acc) CHECK(v == Rational(0));
  }
}

TEST_CASE("eigen solve on the two conics") {
  SolutionSet s = solve_eigen(two_conics_system());
  REQUIRE(s.solutions.size() == 4);
  // every sign combination of (1, 1) appears exactly once
  for (double sx : {-1.0, 1.0})
    for (double sy : {-1.0, 1.0}) {
      int hits = 0;
      for (const auto& sol : s.solutions)
        if (std::abs(sol.point[0] - Complex(sx, 0)) < 1e-10 &&
            std::abs(sol.point[1] - Complex(sy, 0)) < 1e-10)
          ++hits;
      CHECK(hits == 1);
    }
  for (const auto& sol : s.solutions) {
    CHECK(sol.is_real);
    CHECK(sol.residual <= 1e-10);
  }
}

TEST_CASE("eigen solve on the plane curves fixture") {
  SolutionSet s = solve_eigen(plane_curves_system());
  REQUIRE(s.solutions.size() == 7);
  int rational_pts = 0;
  for (const auto& sol : s.solutions) {
    CHECK(sol.is_real);
    CHECK(sol.residual <= 1e-8);
    if (std::abs(sol.point[0]) < 1e-8 && std::abs(sol.point[1]) < 1e-8) ++rational_pts;
    if (std::abs(sol.point[0] - Complex(1, 0)) < 1e-8 &&
        std::abs(sol.point[1] - Complex(1, 0)) < 1e-8)
      ++rational_pts;
  }
  CHECK(rational_pts == 2);
}

TEST_CASE("eigen solve on a factored univariate") {
  PolyQ f = parse_polynomial("x^3 - 6*x^2 + 11*x - 6", {"x"});  // (x-1)(x-2)(x-3)
  SolutionSet s = solve_eigen(SystemQ(1, {f}));
  auto pts = sorted_points(s);
  REQUIRE(pts.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(pts[k][0] - Complex(k + 1, 0)) < 1e-10);
}

TEST_CASE("unit ideal yields no solutions") {
  PolyQ x = PolyQ::variable(1, 0);
  SystemQ F(1, {x, x - PolyQ::constant(1, Rational(1))});
  SolutionSet s = solve_eigen(F);
  CHECK(s.solutions.empty());
}

TEST_CASE("complex reduction commutes: random dense quadrics") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<PolyC> polys;
    for (int i = 0; i < 2; ++i) {
      PolyC f(2);
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) f.add_term(Monomial({a, b}), Complex(u(rng), u(rng)));
      polys.push_back(f);
    }
    SystemC F(2, polys);
    MonomialOrder order = MonomialOrder::grlex(2);
    QuotientBasis<Complex> Q =
        reduce_and_select_basis_complex(build_macaulay(F, 4, order));
    REQUIRE(Q.dimension() == 4);
    MatrixC Mx = multiplication_matrix(Q, PolyC::variable(2, 0));
    MatrixC My = multiplication_matrix(Q, PolyC::variable(2, 1));
    MatrixC D = Mx * My - My * Mx;
    CHECK(D.frobenius_norm() <= 1e-10 * std::max(1.0, Mx.frobenius_norm() * My.frobenius_norm()));
  }
}

TEST_CASE("spectral consistency of coordinate multiplication matrices") {
  SystemC F = to_complex(two_conics_system());
  EigenSolveConfig cfg;
  MonomialOrder order = MonomialOrder::grlex(2);
  QuotientBasis<Complex> Q = stable_quotient_basis(F, cfg, order);
  SolutionSet s = solve_eigen(F);
  for (int j = 0; j < 2; ++j) {
    MatrixC Mj = multiplication_matrix(Q, PolyC::variable(2, j));
    EigenDecomposition ed = eigen(Mj);
    std::vector<double> evs, coords;
    for (const auto& l : ed.eigenvalues) evs.push_back(l.real());
    for (const auto& sol : s.solutions) coords.push_back(sol.point[j].real());
    std::sort(evs.begin(), evs.end());
    std::sort(coords.begin(), coords.end());
    REQUIRE(evs.size() == coords.size());
    for (std::size_t k = 0; k < evs.size(); ++k)
      CHECK(evs[k] == Catch::Approx(coords[k]).margin(1e-8));
  }
}

TEST_CASE("solution eigenvectors are left eigenvectors of M_g") {
  // w = (b_1(z), ..., b_delta(z)) satisfies w^T M_g = g(z) w^T
  SystemQ Fq = two_conics_system();
  MonomialOrder order = MonomialOrder::grlex(2);
  auto [Q, reduced] = reduce_and_select_basis(build_macaulay(Fq, 3, order));
  PolyQ g = PolyQ::variable(2, 0) + Rational(2) * PolyQ::variable(2, 1);
  MatrixQ Mg = multiplication_matrix(Q, g);
  SolutionSet s = solve_eigen(Fq);
  MatrixC MgC(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) MgC(i, j) = to_complex(Mg(i, j));
  PolyC gc = to_complex(g);
  for (const auto& sol : s.solutions) {
    std::vector<Complex> w(4);
    for (int i = 0; i < 4; ++i) {
      // evaluate basis monomial at the solution
      Complex v(1, 0);
      for (int var = 0; var < 2; ++var)
        for (int k = 0; k < Q.basis[i][var]; ++k) v *= sol.point[var];
      w[i] = v;
    }
    std::vector<Complex> wM = MgC.transpose().apply(w);
    Complex gz = gc.evaluate(sol.point);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(wM[i] - gz * w[i]) < 1e-8);
  }
}

TEST_CASE("degree escalation stabilizes the curves fixture") {
  SystemC F = to_complex(plane_curves_system());
  EigenSolveConfig cfg;
  MonomialOrder order = MonomialOrder::grlex(2);
  QuotientBasis<Complex> Q = stable_quotient_basis(F, cfg, order);
  CHECK(Q.dimension() == 7);
}

TEST_CASE("macaulay degree formula") {
  CHECK(macaulay_degree(two_conics_system()) == 3);
  CHECK(macaulay_degree(plane_curves_system()) == 5);
}

#include <catch_amalgamated.hpp>

#include "polysolve/polynomial.hpp"
#include "polysolve/system.hpp"

using namespace polysolve;

TEST_CASE("arithmetic keeps the term map pruned") {
  PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  PolyQ p = x * x + Rational(2) * x * y + y * y;
  PolyQ q = p - x * x - y * y - Rational(2) * x * y;
  CHECK(q.is_zero());
  CHECK(q.degree() == -1);
  CHECK(p.term_count() == 3);
}

TEST_CASE("binomial expansion") {
  PolyQ x = PolyQ::variable(1, 0);
  PolyQ p = (x + PolyQ::constant(1, Rational(1))).pow(4);
  Monomial m(1);
  for (int k = 0; k <= 4; ++k) {
    m[0] = k;
    long expected[] = {1, 4, 6, 4, 1};
    CHECK(p.coefficient(m) == Rational(expected[k]));
  }
}

TEST_CASE("evaluation agrees with naive term summation") {
  PolyQ x = PolyQ::variable(3, 0), y = PolyQ::variable(3, 1), z = PolyQ::variable(3, 2);
  PolyQ p = x.pow(3) * y - Rational(7) * y * z.pow(2) + rat(1, 2) * z - PolyQ::constant(3, Rational(5));
  std::vector<Rational> pt = {rat(2), rat(-1, 3), rat(5, 7)};
  Rational naive(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < m[i]; ++k) t *= pt[i];
    naive += t;
  }
  CHECK(p.evaluate(pt) == naive);
}

TEST_CASE("derivative satisfies the product rule") {
  PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  PolyQ f = x * x * y + y;
  PolyQ g = x - y * y;
  PolyQ lhs = (f * g).derivative(0);
  PolyQ rhs = f.derivative(0) * g + f * g.derivative(0);
  CHECK(lhs == rhs);
}

TEST_CASE("leading terms under the three orders") {
  // p = x^2 y + x y^2 + x^3... distinct leaders under lex vs graded orders
  PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  PolyQ p = x * x + y.pow(3);
  CHECK(p.leading_monomial(MonomialOrder::lex(2)) == Monomial({2, 0}));
  CHECK(p.leading_monomial(MonomialOrder::grlex(2)) == Monomial({0, 3}));
  CHECK(p.leading_monomial(MonomialOrder::grevlex(2)) == Monomial({0, 3}));

  // grevlex vs grlex disagree on x y^2 vs x^2 z in three variables
  PolyQ q = PolyQ::monomial(3, Monomial({1, 2, 0}), Rational(1)) +
            PolyQ::monomial(3, Monomial({2, 0, 1}), Rational(1));
  CHECK(q.leading_monomial(MonomialOrder::grlex(3)) == Monomial({2, 0, 1}));
  CHECK(q.leading_monomial(MonomialOrder::grevlex(3)) == Monomial({1, 2, 0}));
}

TEST_CASE("substitute replaces a variable by a polynomial") {
  PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  PolyQ p = x * x - y;
  // x -> y + 1 gives y^2 + y + 1
  PolyQ r = p.substitute(0, y + PolyQ::constant(2, Rational(1)));
  CHECK(r == y * y + y + PolyQ::constant(2, Rational(1)));
}

TEST_CASE("ring mismatches are rejected") {
  PolyQ p = PolyQ::variable(2, 0);
  PolyQ q = PolyQ::variable(3, 0);
  CHECK_THROWS_AS(p + q, DimensionMismatch);
  CHECK_THROWS_AS(p.evaluate(std::vector<Rational>{Rational(1)}), DimensionMismatch);
}

TEST_CASE("complex conversion is explicit and value-preserving") {
  PolyQ p = rat(1, 2) * PolyQ::variable(1, 0) - PolyQ::constant(1, Rational(3));
  PolyC pc = to_complex(p);
  std::vector<Complex> pt = {Complex(2.0, 0.0)};
  CHECK(std::abs(pc.evaluate(pt) - Complex(-2.0, 0.0)) < 1e-15);
}

TEST_CASE("system shape checks") {
  PolyQ x = PolyQ::variable(2, 0), y = PolyQ::variable(2, 1);
  SystemQ F(2, {x * y - PolyQ::constant(2, Rational(1)), x + y});
  CHECK(F.square());
  CHECK(F.degrees() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(SystemQ(3, {x}), DimensionMismatch);
}

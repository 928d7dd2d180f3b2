#ifndef POLYSOLVE_LINE_SUBSTITUTION_HPP
#define POLYSOLVE_LINE_SUBSTITUTION_HPP

#include <array>

#include "polysolve/polynomial.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

// Re-embed a polynomial into a larger ring; var_map[i] is the new
// index of old variable i.
template <class S>
Polynomial<S> extend_ring(const Polynomial<S>& p, int new_nvars,
                          const std::vector<int>& var_map) {
  Polynomial<S> r(new_nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(new_nvars);
    for (int i = 0; i < m.nvars(); ++i) nm[var_map[i]] = m[i];
    r.add_term(nm, c);
  }
  return r;
}

// Remove variables that no longer occur. keep[i] lists surviving
// variable indices in their new order.
template <class S>
Polynomial<S> restrict_ring(const Polynomial<S>& p, const std::vector<int>& keep) {
  std::vector<bool> kept(p.nvars(), false);
  for (int v : keep) kept[v] = true;
  Polynomial<S> r(static_cast<int>(keep.size()));
  for (const auto& [m, c] : p.terms()) {
    Monomial nm(static_cast<int>(keep.size()));
    for (int i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!kept[i]) throw std::domain_error("polynomial still involves a dropped variable");
    }
    for (std::size_t j = 0; j < keep.size(); ++j) nm[static_cast<int>(j)] = m[keep[j]];
    r.add_term(nm, c);
  }
  return r;
}

// Substitute x_i -> a_i + t*b_i into a cubic surface equation in three
// variables and return the coefficient polynomials of t^3, t^2, t, 1
// in Q[a1,a2,a3,b1,b2,b3]. A line lies on the surface iff all four
// vanish.
inline std::array<PolyQ, 4> substitute_line(const PolyQ& f) {
  if (f.nvars() != 3) throw DimensionMismatch("substitute_line expects a trivariate polynomial");
  if (f.degree() > 3) throw std::domain_error("substitute_line expects degree <= 3");
  // working ring: a1,a2,a3,b1,b2,b3,t
  const int N = 7, T = 6;
  std::vector<PolyQ> lines;
  for (int i = 0; i < 3; ++i) {
    PolyQ ai = PolyQ::variable(N, i);
    PolyQ bi = PolyQ::variable(N, 3 + i);
    PolyQ t = PolyQ::variable(N, T);
    lines.push_back(ai + t * bi);
  }
  PolyQ sub(N);
  for (const auto& [m, c] : f.terms()) {
    PolyQ term = PolyQ::constant(N, c);
    for (int i = 0; i < 3; ++i) term = term * lines[i].pow(m[i]);
    sub = sub + term;
  }
  // split by powers of t
  std::array<PolyQ, 4> coeffs = {PolyQ(6), PolyQ(6), PolyQ(6), PolyQ(6)};
  std::vector<int> keep = {0, 1, 2, 3, 4, 5};
  for (const auto& [m, c] : sub.terms()) {
    int k = m[T];
    if (k > 3) throw std::logic_error("degree in t exceeds 3 after substitution");
    Monomial rest = m;
    rest[T] = 0;
    PolyQ piece = restrict_ring(PolyQ::monomial(N, rest, c), keep);
    coeffs[3 - k] = coeffs[3 - k] + piece;  // coeffs[0] multiplies t^3
  }
  return coeffs;
}

// Apply the affine-linear gauge fixing a3 = -(7+a1+3a2)/5 and
// b3 = -(11+3b1+5b2)/7 to a polynomial in Q[a1,a2,a3,b1,b2,b3] and
// return the result in Q[a1,a2,b1,b2].
inline PolyQ fix_line_gauge(const PolyQ& p) {
  if (p.nvars() != 6) throw DimensionMismatch("expected the 6-variable line ring");
  const int N = 6;
  PolyQ a1 = PolyQ::variable(N, 0), a2 = PolyQ::variable(N, 1);
  PolyQ b1 = PolyQ::variable(N, 3), b2 = PolyQ::variable(N, 4);
  PolyQ a3 = rat(-1, 5) * (PolyQ::constant(N, Rational(7)) + a1 + Rational(3) * a2);
  PolyQ b3 = rat(-1, 7) * (PolyQ::constant(N, Rational(11)) + Rational(3) * b1 + Rational(5) * b2);
  PolyQ q = p.substitute(2, a3).substitute(5, b3);
  return restrict_ring(q, {0, 1, 3, 4});
}

}  // namespace polysolve

#endif

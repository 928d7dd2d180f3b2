#ifndef POLYSOLVE_GROEBNER_HPP
#define POLYSOLVE_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "polysolve/macaulay.hpp"
#include "polysolve/polynomial.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

template <class S>
struct DivisionResult {
  std::vector<Polynomial<S>> quotients;
  Polynomial<S> remainder;
};

// Multivariate division with remainder: repeatedly cancel the leading
// term of the running dividend against the first divisor whose leading
// monomial divides it. The remainder has no term divisible by any
// leading monomial of the divisors.
template <class S>
DivisionResult<S> divide(const Polynomial<S>& f, const std::vector<Polynomial<S>>& divisors,
                         const MonomialOrder& order) {
  int n = f.nvars();
  DivisionResult<S> out;
  out.quotients.assign(divisors.size(), Polynomial<S>::zero(n));
  out.remainder = Polynomial<S>::zero(n);
  std::vector<std::pair<Monomial, S>> lead;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    lead.push_back(g.leading_term(order));
  }
  Polynomial<S> p = f;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divides(lead[i].first, lm)) continue;
      Monomial q = quotient(lm, lead[i].first);
      S c = lc / lead[i].second;
      Polynomial<S> t = Polynomial<S>::monomial(n, q, c);
      out.quotients[i] = out.quotients[i] + t;
      p = p - t * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial<S> t = Polynomial<S>::monomial(n, lm, lc);
      out.remainder = out.remainder + t;
      p = p - t;
    }
  }
  return out;
}

template <class S>
Polynomial<S> normal_form(const Polynomial<S>& f, const std::vector<Polynomial<S>>& basis,
                          const MonomialOrder& order) {
  return divide(f, basis, order).remainder;
}

template <class S>
Polynomial<S> s_polynomial(const Polynomial<S>& f, const Polynomial<S>& g,
                           const MonomialOrder& order) {
  auto [lmf, lcf] = f.leading_term(order);
  auto [lmg, lcg] = g.leading_term(order);
  Monomial l = lcm(lmf, lmg);
  int n = f.nvars();
  Polynomial<S> tf = Polynomial<S>::monomial(n, quotient(l, lmf), ScalarOps<S>::one() / lcf);
  Polynomial<S> tg = Polynomial<S>::monomial(n, quotient(l, lmg), ScalarOps<S>::one() / lcg);
  return tf * f - tg * g;
}

struct BuchbergerOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Buchberger's first criterion: coprime leading monomials.
inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace detail

// Buchberger's algorithm with the normal pair-selection strategy
// (smallest lcm first) and both standard criteria, followed by
// autoreduction. Output is the reduced basis: monic generators, no
// term of one divisible by the leading monomial of another, sorted by
// ascending leading monomial. This makes the result unique for a
// given ideal and order.
template <class S>
std::vector<Polynomial<S>> buchberger(const std::vector<Polynomial<S>>& input,
                                      const MonomialOrder& order,
                                      std::size_t pair_cap = 100000) {
  static_assert(ScalarOps<S>::exact, "Buchberger here runs over exact scalars only");
  std::vector<Polynomial<S>> G;
  for (const auto& f : input)
    if (!f.is_zero()) G.push_back(f);
  if (G.empty()) return G;
  int n = G[0].nvars();

  auto lm = [&](std::size_t i) { return G[i].leading_monomial(order); };
  using Pair = std::pair<std::size_t, std::size_t>;
  auto pair_less = [&](const Pair& a, const Pair& b) {
    Monomial la = lcm(lm(a.first), lm(a.second));
    Monomial lb = lcm(lm(b.first), lm(b.second));
    int c = order.compare(la, lb);
    if (c != 0) return c < 0;
    return a < b;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
  std::set<Pair> handled;

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > pair_cap)
      throw BuchbergerOverflow("pair queue exceeded the configured cap");
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);
    handled.insert(pr);
    auto [i, j] = pr;
    Monomial li = lm(i), lj = lm(j);
    if (detail::coprime(li, lj)) continue;
    // chain criterion: some k with lm(k) | lcm(li, lj) and both
    // (i,k), (j,k) already handled
    Monomial l = lcm(li, lj);
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == i || k == j || !divides(lm(k), l)) continue;
      Pair p1{std::min(i, k), std::max(i, k)}, p2{std::min(j, k), std::max(j, k)};
      if (handled.count(p1) && handled.count(p2)) skip = true;
    }
    if (skip) continue;
    Polynomial<S> r = normal_form(s_polynomial(G[i], G[j], order), G, order);
    if (r.is_zero()) continue;
    std::size_t idx = G.size();
    G.push_back(std::move(r));
    for (std::size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
  }

  // autoreduce: drop generators whose leading monomial another one
  // divides, then fully reduce each against the rest and make monic
  std::vector<Polynomial<S>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    Monomial li = lm(i);
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      Monomial ljm = G[j].leading_monomial(order);
      if (divides(ljm, li) && (ljm != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Polynomial<S>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<S>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial<S> r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
    auto [lmr, lcr] = r.leading_term(order);
    reduced.push_back((ScalarOps<S>::one() / lcr) * r);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return reduced;
}

struct NotZeroDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Monomials outside the leading-term ideal of a Groebner basis. Only
// defined (finite) when every variable has a pure power among the
// leading monomials.
template <class S>
std::vector<Monomial> standard_monomials(const std::vector<Polynomial<S>>& gb,
                                         const MonomialOrder& order) {
  if (gb.empty()) throw std::invalid_argument("empty basis");
  int n = gb[0].nvars();
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.leading_monomial(order));
  std::vector<int> cap(n, -1);
  for (const auto& l : leads) {
    for (int v = 0; v < n; ++v) {
      bool pure = l[v] > 0;
      for (int w = 0; w < n && pure; ++w)
        if (w != v && l[w] > 0) pure = false;
      if (pure && (cap[v] < 0 || l[v] < cap[v])) cap[v] = l[v];
    }
    if (l.is_one()) return {};  // unit ideal
  }
  for (int v = 0; v < n; ++v)
    if (cap[v] < 0)
      throw NotZeroDimensional("no pure power of a variable leads the basis");
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      for (const auto& l : leads)
        if (divides(l, m)) return;
      out.push_back(m);
      return;
    }
    for (int e = 0; e < cap[v]; ++e) {
      m[v] = e;
      rec(v + 1);
      m[v] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.greater(a, b);
  });
  return out;
}

// Groebner basis of the elimination ideal I with the first `keep`
// variables removed, via a lex order ranking those variables highest.
// Returned polynomials stay in the full ring; each one only involves
// the last nvars - eliminate_count variables.
template <class S>
std::vector<Polynomial<S>> eliminate(const std::vector<Polynomial<S>>& input,
                                     int eliminate_count) {
  if (input.empty()) return {};
  int n = input[0].nvars();
  if (eliminate_count < 0 || eliminate_count > n)
    throw std::invalid_argument("bad variable count to eliminate");
  MonomialOrder order = MonomialOrder::lex(n);
  std::vector<Polynomial<S>> gb = buchberger(input, order);
  std::vector<Polynomial<S>> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& [m, c] : g.terms())
      for (int v = 0; v < eliminate_count; ++v)
        if (m[v] > 0) pure = false;
    if (pure) out.push_back(g);
  }
  return out;
}

// Quotient-ring data straight from a Groebner basis: standard
// monomials as the basis, normal forms via division. Slots into the
// same multiplication-matrix and eigenvalue machinery as the
// truncated construction.
template <class S>
QuotientBasis<S> quotient_basis_from_groebner(const std::vector<Polynomial<S>>& gb,
                                              const MonomialOrder& order) {
  QuotientBasis<S> Q;
  if (gb.empty()) throw std::invalid_argument("empty basis");
  int n = gb[0].nvars();
  Q.nvars = n;
  Q.order = order;
  Q.basis = standard_monomials(gb, order);
  if (Q.basis.empty()) throw InconsistentSystem("quotient dimension 0: no solutions");
  // tabulate normal forms of x_v * b for every basis element, which is
  // all multiplication_matrix ever asks for
  for (int v = 0; v < n; ++v) {
    Monomial xv(n);
    xv[v] = 1;
    for (const auto& b : Q.basis) {
      Monomial m = xv * b;
      if (Q.basis_index(m) >= 0 || Q.nf_table.count(m)) continue;
      Polynomial<S> nf =
          normal_form(Polynomial<S>::monomial(n, m, ScalarOps<S>::one()), gb, order);
      std::vector<S> coords(Q.basis.size(), ScalarOps<S>::zero());
      for (const auto& [mm, c] : nf.terms()) {
        int bi = Q.basis_index(mm);
        if (bi < 0) throw std::logic_error("normal form left the standard monomials");
        coords[bi] = c;
      }
      Q.nf_table[m] = std::move(coords);
    }
  }
  Q.truncation_degree = -1;  // not a truncated construction
  return Q;
}

inline QuotientBasis<Complex> to_complex(const QuotientBasis<Rational>& Q) {
  QuotientBasis<Complex> R;
  R.nvars = Q.nvars;
  R.order = Q.order;
  R.basis = Q.basis;
  R.truncation_degree = Q.truncation_degree;
  for (const auto& [m, v] : Q.nf_table) {
    std::vector<Complex> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_complex(v[i]);
    R.nf_table[m] = std::move(w);
  }
  return R;
}

// Eigenvalue solver driven by an exact Groebner basis instead of a
// truncated matrix: same eigenvector extraction, but the quotient data
// is exact.
inline SolutionSet solve_groebner_eigen(const SystemQ& F, const EigenSolveConfig& cfg = {}) {
  MonomialOrder order = MonomialOrder::grlex(F.nvars);
  SolutionSet out;
  std::vector<PolyQ> gb = buchberger(F.polys, order);
  QuotientBasis<Rational> Qq;
  try {
    Qq = quotient_basis_from_groebner(gb, order);
  } catch (const InconsistentSystem&) {
    return out;
  }
  QuotientBasis<Complex> Q = to_complex(Qq);
  int n = F.nvars, delta = Q.dimension();
  Monomial one(n);
  int idx1 = Q.basis_index(one);
  if (idx1 < 0) throw std::runtime_error("basis lacks the monomial 1; cannot normalize");

  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  PolyC h(n);
  for (int j = 0; j < n; ++j) h = h + Complex(unif(rng), 0.0) * PolyC::variable(n, j);
  MatrixC Mh = multiplication_matrix(Q, h);
  EigenDecomposition ed = eigen(Mh.transpose());

  std::vector<MatrixC> Mx;
  for (int j = 0; j < n; ++j)
    Mx.push_back(multiplication_matrix(Q, PolyC::variable(n, j)).transpose());

  SystemC Fc = to_complex(F);
  auto J = system_jacobian(Fc);
  for (int k = 0; k < delta; ++k) {
    std::vector<Complex> w(delta);
    for (int i = 0; i < delta; ++i) w[i] = ed.eigenvectors(i, k);
    int kmax = 0;
    for (int i = 1; i < delta; ++i)
      if (std::abs(w[i]) > std::abs(w[kmax])) kmax = i;
    std::vector<Complex> z(n);
    for (int j = 0; j < n; ++j) {
      std::vector<Complex> Mw = Mx[j].apply(w);
      z[j] = Mw[kmax] / w[kmax];
    }
    z = newton_refine(Fc, J, std::move(z));
    Solution sol;
    sol.residual = max_residual(Fc, z);
    sol.point = std::move(z);
    sol.is_real = point_is_real(sol.point, cfg.real_tol);
    sol.provenance = "groebner-eigen";
    if (sol.residual <= cfg.residual_tol)
      out.solutions.push_back(std::move(sol));
    else
      out.warnings.push_back("eigen candidate rejected: residual " +
                             std::to_string(sol.residual));
  }
  return out;
}

}  // namespace polysolve

#endif

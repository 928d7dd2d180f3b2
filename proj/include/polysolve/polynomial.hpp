#ifndef POLYSOLVE_POLYNOMIAL_HPP
#define POLYSOLVE_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polysolve/monomial.hpp"
#include "polysolve/scalar.hpp"

namespace polysolve {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sparse multivariate polynomial over an exact or floating scalar
// field. Zero coefficients are never stored; values are immutable in
// spirit (all operations return new polynomials).
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  using TermMap = std::map<Monomial, S>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }

  static Polynomial constant(int nvars, const S& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Monomial m(nvars);
    m[i] = 1;
    p.add_term(m, ScalarOps<S>::one());
    return p;
  }

  static Polynomial monomial(int nvars, const Monomial& m, const S& c) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // deg(0) = -1 by convention
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  S coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarOps<S>::zero() : it->second;
  }

  void add_term(const Monomial& m, const S& c) {
    if (static_cast<int>(m.e.size()) != nvars_)
      throw DimensionMismatch("monomial/polynomial variable count mismatch");
    if (ScalarOps<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (ScalarOps<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  friend Polynomial operator*(const S& c, const Polynomial& p) {
    Polynomial r(p.nvars_);
    if (ScalarOps<S>::is_zero(c)) return r;
    for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
    return r;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(nvars_, ScalarOps<S>::one());
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::out_of_range("variable index");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      r.add_term(d, S(m[var]) * c);
    }
    return r;
  }

  // Horner-style evaluation: factor out the first variable present,
  // recurse on the grouped coefficient polynomials.
  S evaluate(std::span<const S> point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw DimensionMismatch("evaluation point has wrong length");
    std::vector<const std::pair<const Monomial, S>*> view;
    view.reserve(terms_.size());
    for (const auto& t : terms_) view.push_back(&t);
    return eval_rec(view, 0, point);
  }

  S evaluate(const std::vector<S>& point) const {
    return evaluate(std::span<const S>(point));
  }

  std::vector<Monomial> support() const {
    if (is_zero()) throw std::domain_error("support of the zero polynomial");
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
  }

  std::pair<Monomial, S> leading_term(const MonomialOrder& order) const {
    if (is_zero()) throw std::domain_error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  Monomial leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).first;
  }

  // Substitute a polynomial for one variable. The replacement lives in
  // the same ring.
  Polynomial substitute(int var, const Polynomial& replacement) const {
    check_same(replacement);
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      int k = rest[var];
      rest[var] = 0;
      r = r + c * (Polynomial::monomial(nvars_, rest, ScalarOps<S>::one()) *
                   replacement.pow(k));
    }
    return r;
  }

 private:
  void check_same(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
      throw DimensionMismatch("polynomials live in different rings");
  }

  static S eval_rec(std::span<const std::pair<const Monomial, S>* const> terms,
                    int var, std::span<const S> point) {
    if (terms.empty()) return ScalarOps<S>::zero();
    int n = static_cast<int>(point.size());
    if (var == n) return terms[0]->second;
    // terms are sorted by exponent vector, so equal x_var exponents are
    // contiguous at each recursion level
    std::vector<std::pair<int, S>> groups;  // (exponent of x_var, value)
    std::size_t i = 0;
    while (i < terms.size()) {
      int exp = terms[i]->first[var];
      std::size_t j = i;
      while (j < terms.size() && terms[j]->first[var] == exp) ++j;
      groups.emplace_back(exp, eval_rec(terms.subspan(i, j - i), var + 1, point));
      i = j;
    }
    // Horner on the exponent gaps, highest exponent first
    S acc = groups.back().second;
    for (int g = static_cast<int>(groups.size()) - 2; g >= 0; --g) {
      int gap = groups[g + 1].first - groups[g].first;
      for (int k = 0; k < gap; ++k) acc = acc * point[var];
      acc += groups[g].second;
    }
    for (int k = 0; k < groups.front().first; ++k) acc = acc * point[var];
    return acc;
  }

  int nvars_;
  TermMap terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyC = Polynomial<Complex>;

// Rational -> complex coefficient conversion is always explicit.
inline PolyC to_complex(const PolyQ& p) {
  PolyC r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, to_complex(c));
  return r;
}

}  // namespace polysolve

#endif

#ifndef POLYSOLVE_MONOMIAL_HPP
#define POLYSOLVE_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polysolve {

// Exponent vector of a power product x^alpha. Dense representation:
// every ambient variable count in this project is small (n <= 8).
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  Monomial(std::initializer_list<int> exps) : e(exps) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }

  // Container ordering only (used as a map key); the mathematically
  // meaningful orders live in MonomialOrder.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

// b / a, requires divides(a, b)
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = b.e[i] - a.e[i];
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

// Total, multiplicative well-orders on monomials: lex, graded lex and
// graded reverse lex, each with a variable precedence permutation.
// precedence[0] is the index of the highest-ranked variable.
struct MonomialOrder {
  enum class Kind { lex, grlex, grevlex };

  Kind kind = Kind::grevlex;
  std::vector<int> precedence;

  static MonomialOrder lex(int nvars) { return make(Kind::lex, nvars); }
  static MonomialOrder grlex(int nvars) { return make(Kind::grlex, nvars); }
  static MonomialOrder grevlex(int nvars) { return make(Kind::grevlex, nvars); }

  static MonomialOrder make(Kind k, int nvars) {
    MonomialOrder o;
    o.kind = k;
    o.precedence.resize(nvars);
    std::iota(o.precedence.begin(), o.precedence.end(), 0);
    return o;
  }

  // positive if a > b, negative if a < b, zero if equal
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind != Kind::lex) {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
    }
    if (kind == Kind::grevlex) {
      // last variable in precedence with differing exponent; the one
      // with the smaller exponent there is the larger monomial
      for (auto it = precedence.rbegin(); it != precedence.rend(); ++it) {
        int d = a.e[*it] - b.e[*it];
        if (d != 0) return d > 0 ? -1 : 1;
      }
      return 0;
    }
    for (int v : precedence) {
      int d = a.e[v] - b.e[v];
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

}  // namespace polysolve

#endif

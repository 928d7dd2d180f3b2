#ifndef POLYSOLVE_ROOT_COUNTS_HPP
#define POLYSOLVE_ROOT_COUNTS_HPP

#include <optional>
#include <string>

#include "polysolve/hull.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

// d_1 * ... * d_n with overflow guard.
inline long long bezout_bound(const std::vector<int>& degrees) {
  long long prod = 1;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("Bezout bound needs positive degrees");
    __int128 next = static_cast<__int128>(prod) * d;
    if (next > static_cast<__int128>(1) << 62) throw std::overflow_error("Bezout bound overflow");
    prod = static_cast<long long>(next);
  }
  return prod;
}

// Coefficient of lambda_1...lambda_n in Vol(sum of dilated hulls), via
// inclusion-exclusion over Minkowski sums of subsets. Exponential in n;
// fine for the n <= 4 desk scale this project targets.
inline long long mixed_volume(const std::vector<Support>& supports) {
  int n = static_cast<int>(supports.size());
  if (n == 0) throw std::invalid_argument("mixed volume of no supports");
  for (const auto& A : supports)
    if (A.dim != n) throw DimensionMismatch("need n supports in dimension n");
  if (n > 4) throw DimensionCapExceeded("inclusion-exclusion mixed volume capped at n = 4");

  std::vector<NewtonPolytope> hulls;
  hulls.reserve(n);
  // filtered vertex sets keep the staged Minkowski sums small: the
  // summand point count is the product of the vertex counts
  for (const auto& A : supports) hulls.push_back(convex_hull(A, true));

  Rational acc(0);
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::optional<NewtonPolytope> sum;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1 << i))) continue;
      if (!sum)
        sum = hulls[i];
      else
        sum = minkowski_sum(*sum, hulls[i], true);
    }
    int parity = n - __builtin_popcount(static_cast<unsigned>(mask));
    Rational v = sum->vol;
    acc += (parity % 2 == 0) ? v : -v;
  }
  if (acc.get_den() != 1) throw std::logic_error("mixed volume came out non-integral");
  long long mv = acc.get_num().get_si();
  if (mv < 0) throw std::logic_error("mixed volume came out negative");
  return mv;
}

struct RootCountReport {
  long long bezout = 0;
  std::optional<long long> kushnirenko;  // only when all supports coincide
  std::optional<long long> bkk;          // needs s = n
  bool zero_in_all_supports = false;     // torus count extends to K^n when true
  std::string note;
};

template <class S>
RootCountReport count_report(const PolySystem<S>& F) {
  RootCountReport rep;
  std::vector<int> degs;
  for (const auto& f : F.polys) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial in system");
    degs.push_back(f.degree());
  }
  rep.bezout = bezout_bound(degs);
  if (!F.square()) {
    rep.note = "system is not square; only the Bezout bound applies";
    return rep;
  }
  std::vector<Support> supports;
  for (const auto& f : F.polys) supports.push_back(Support::of(f));
  bool same = true;
  for (std::size_t i = 1; i < supports.size(); ++i)
    if (supports[i].points != supports[0].points) same = false;
  if (same) rep.kushnirenko = normalized_volume(supports[0]);
  if (F.nvars <= 4) rep.bkk = mixed_volume(supports);
  rep.zero_in_all_supports = true;
  LatticePoint origin(F.nvars, 0);
  for (const auto& A : supports)
    if (!std::binary_search(A.points.begin(), A.points.end(), origin))
      rep.zero_in_all_supports = false;
  rep.note = rep.zero_in_all_supports
                 ? "0 lies in every support: the torus bounds also count solutions in K^n"
                 : "Kushnirenko/BKK bounds count solutions with all coordinates nonzero";
  return rep;
}

}  // namespace polysolve

#endif

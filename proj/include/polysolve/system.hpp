#ifndef POLYSOLVE_SYSTEM_HPP
#define POLYSOLVE_SYSTEM_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "polysolve/polynomial.hpp"

namespace polysolve {

// A system f_1 = ... = f_s = 0 in a shared ring.
template <class S>
struct PolySystem {
  int nvars = 0;
  std::vector<Polynomial<S>> polys;

  PolySystem() = default;
  PolySystem(int n, std::vector<Polynomial<S>> fs) : nvars(n), polys(std::move(fs)) {
    if (polys.empty()) throw std::invalid_argument("system needs at least one polynomial");
    for (const auto& f : polys)
      if (f.nvars() != nvars) throw DimensionMismatch("system polynomials disagree on nvars");
  }

  int size() const { return static_cast<int>(polys.size()); }
  bool square() const { return size() == nvars; }

  std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(polys.size());
    for (const auto& f : polys) d.push_back(f.degree());
    return d;
  }

  std::vector<S> evaluate(const std::vector<S>& point) const {
    std::vector<S> v;
    v.reserve(polys.size());
    for (const auto& f : polys) v.push_back(f.evaluate(point));
    return v;
  }
};

using SystemQ = PolySystem<Rational>;
using SystemC = PolySystem<Complex>;

inline SystemC to_complex(const SystemQ& F) {
  std::vector<PolyC> polys;
  polys.reserve(F.polys.size());
  for (const auto& f : F.polys) polys.push_back(to_complex(f));
  return SystemC(F.nvars, std::move(polys));
}

}  // namespace polysolve

#endif

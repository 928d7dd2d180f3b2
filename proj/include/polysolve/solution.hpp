#ifndef POLYSOLVE_SOLUTION_HPP
#define POLYSOLVE_SOLUTION_HPP

#include <cmath>
#include <string>
#include <vector>

#include "polysolve/matrix.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

struct Solution {
  std::vector<Complex> point;
  double residual = 0;  // max_i |f_i(z)|
  bool is_real = false;
  std::string provenance;  // "eigen" or "path <k>"
};

struct SolutionSet {
  std::vector<Solution> solutions;
  // homotopy statistics; zero for the eigenvalue pipeline
  int paths_tracked = 0;
  int paths_diverged = 0;
  int paths_failed = 0;
  std::vector<std::string> warnings;
};

// Row j holds grad f_j.
inline std::vector<std::vector<PolyC>> system_jacobian(const SystemC& F) {
  std::vector<std::vector<PolyC>> J(F.polys.size());
  for (std::size_t j = 0; j < F.polys.size(); ++j)
    for (int i = 0; i < F.nvars; ++i) J[j].push_back(F.polys[j].derivative(i));
  return J;
}

inline MatrixC evaluate_jacobian(const std::vector<std::vector<PolyC>>& J,
                                 const std::vector<Complex>& z) {
  MatrixC M(static_cast<int>(J.size()), static_cast<int>(J.empty() ? 0 : J[0].size()));
  for (std::size_t j = 0; j < J.size(); ++j)
    for (std::size_t i = 0; i < J[j].size(); ++i) M(static_cast<int>(j), static_cast<int>(i)) = J[j][i].evaluate(z);
  return M;
}

inline double max_residual(const SystemC& F, const std::vector<Complex>& z) {
  double r = 0;
  for (const auto& f : F.polys) r = std::max(r, std::abs(f.evaluate(z)));
  return r;
}

// Newton iteration on a square system; returns the refined point.
// Stops early if the step stalls or the Jacobian degenerates.
inline std::vector<Complex> newton_refine(const SystemC& F,
                                          const std::vector<std::vector<PolyC>>& J,
                                          std::vector<Complex> z, int max_iters = 20,
                                          double tol = 1e-14) {
  if (!F.square()) return z;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<Complex> fz = F.evaluate(z);
    double scale = 1.0;
    for (const auto& x : z) scale = std::max(scale, std::abs(x));
    MatrixC Jz = evaluate_jacobian(J, z);
    std::vector<Complex> step;
    try {
      step = lu_solve(Jz, fz);
    } catch (const SingularMatrix&) {
      break;
    }
    double snorm = 0;
    for (int i = 0; i < F.nvars; ++i) {
      z[i] -= step[i];
      snorm = std::max(snorm, std::abs(step[i]));
    }
    if (snorm <= tol * scale) break;
  }
  return z;
}

inline bool point_is_real(const std::vector<Complex>& z, double imag_tol) {
  for (const auto& x : z)
    if (std::abs(x.imag()) > imag_tol) return false;
  return true;
}

inline double point_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace polysolve

#endif

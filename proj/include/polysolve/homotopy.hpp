#ifndef POLYSOLVE_HOMOTOPY_HPP
#define POLYSOLVE_HOMOTOPY_HPP

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "polysolve/matrix.hpp"
#include "polysolve/solution.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

struct TrackerConfig {
  double initial_step = 0.1;
  double min_step = 1e-14;
  double max_step = 0.1;
  double newton_tol = 1e-10;
  int max_newton = 3;
  double divergence_radius = 1e8;
  double endpoint_tol = 1e-12;
  double dedup_tol = 1e-6;
  unsigned seed = 20220905;
  bool trace = false;
};

struct PathPoint {
  double t;
  std::vector<Complex> x;
  double step;
};

enum class PathStatus { converged, diverged, failed };

struct PathResult {
  PathStatus status = PathStatus::failed;
  std::vector<Complex> endpoint;
  int steps = 0;
  int rejections = 0;
  std::vector<PathPoint> trace;
};

// Straight-line homotopy H(x; t) = t F(x) + (1 - t) gamma G(x),
// tracked from t = 0 (start system G) to t = 1 (target F).
class Homotopy {
 public:
  Homotopy(SystemC F, SystemC G, Complex gamma)
      : F_(std::move(F)), G_(std::move(G)), gamma_(gamma) {
    if (F_.nvars != G_.nvars || F_.polys.size() != G_.polys.size())
      throw DimensionMismatch("target and start systems do not match");
    if (!F_.square()) throw std::invalid_argument("homotopy tracking needs a square system");
    JF_ = system_jacobian(F_);
    JG_ = system_jacobian(G_);
  }

  int nvars() const { return F_.nvars; }
  const SystemC& target() const { return F_; }

  std::vector<Complex> value(const std::vector<Complex>& x, double t) const {
    std::vector<Complex> f = F_.evaluate(x), g = G_.evaluate(x);
    std::vector<Complex> h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      h[i] = t * f[i] + (1.0 - t) * gamma_ * g[i];
    return h;
  }

  // dH/dt = F - gamma G
  std::vector<Complex> t_derivative(const std::vector<Complex>& x) const {
    std::vector<Complex> f = F_.evaluate(x), g = G_.evaluate(x);
    std::vector<Complex> d(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) d[i] = f[i] - gamma_ * g[i];
    return d;
  }

  MatrixC x_jacobian(const std::vector<Complex>& x, double t) const {
    MatrixC Jf = evaluate_jacobian(JF_, x), Jg = evaluate_jacobian(JG_, x);
    int n = nvars();
    MatrixC J(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) J(i, j) = t * Jf(i, j) + (1.0 - t) * gamma_ * Jg(i, j);
    return J;
  }

 private:
  SystemC F_, G_;
  Complex gamma_;
  std::vector<std::vector<PolyC>> JF_, JG_;
};

// Start system x_i^{d_i} - 1 with its d_1 * ... * d_n joint roots of
// unity as start points.
inline SystemC total_degree_start(const std::vector<int>& degrees) {
  int n = static_cast<int>(degrees.size());
  std::vector<PolyC> polys;
  for (int i = 0; i < n; ++i) {
    if (degrees[i] < 1) throw std::invalid_argument("start system needs positive degrees");
    Monomial m(n);
    m[i] = degrees[i];
    PolyC g(n);
    g.add_term(m, Complex(1, 0));
    g.add_term(Monomial(n), Complex(-1, 0));
    polys.push_back(std::move(g));
  }
  return SystemC(n, std::move(polys));
}

inline std::vector<std::vector<Complex>> total_degree_start_points(
    const std::vector<int>& degrees) {
  int n = static_cast<int>(degrees.size());
  long long total = 1;
  for (int d : degrees) {
    total *= d;
    if (total > 1000000) throw std::overflow_error("refusing more than 1e6 start points");
  }
  std::vector<std::vector<Complex>> pts;
  pts.reserve(static_cast<std::size_t>(total));
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Complex> p(n);
    for (int i = 0; i < n; ++i) {
      double ang = 2.0 * std::numbers::pi * idx[i] / degrees[i];
      p[i] = Complex(std::cos(ang), std::sin(ang));
    }
    pts.push_back(std::move(p));
    int k = n - 1;
    while (k >= 0 && ++idx[k] == degrees[k]) idx[k--] = 0;
    if (k < 0) break;
  }
  return pts;
}

// Predictor-corrector path tracker: Euler prediction along dx/dt =
// -Jx^-1 Ht, a short Newton correction at the new t, step halving on
// rejection and doubling after three straight accepts.
inline PathResult track_path(const Homotopy& H, std::vector<Complex> x,
                             const TrackerConfig& cfg = {}) {
  PathResult out;
  int n = H.nvars();
  double t = 0.0, step = cfg.initial_step;
  int streak = 0;
  if (cfg.trace) out.trace.push_back({t, x, step});
  while (t < 1.0) {
    double dt = std::min(step, 1.0 - t);
    bool accepted = false;
    std::vector<Complex> xn = x;
    try {
      MatrixC J = H.x_jacobian(x, t);
      std::vector<Complex> ht = H.t_derivative(x);
      std::vector<Complex> dx = LuFactorization(J).solve(ht);
      for (int i = 0; i < n; ++i) xn[i] = x[i] - dt * dx[i];
      double tn = t + dt;
      double first_cn = -1.0, cn = 0.0;
      for (int it = 0; it < cfg.max_newton; ++it) {
        std::vector<Complex> h = H.value(xn, tn);
        std::vector<Complex> corr = LuFactorization(H.x_jacobian(xn, tn)).solve(h);
        double xnorm = 1.0;
        cn = 0.0;
        for (int i = 0; i < n; ++i) {
          xn[i] -= corr[i];
          cn = std::max(cn, std::abs(corr[i]));
          xnorm = std::max(xnorm, std::abs(xn[i]));
        }
        if (first_cn < 0) first_cn = cn;
        if (cn <= cfg.newton_tol * xnorm) {
          accepted = true;
          break;
        }
      }
      // strongly contracting corrections mean the iterate is inside the
      // Newton basin even when rounding noise blocks the tolerance
      if (!accepted && first_cn > 0 && cn <= 1e-4 * first_cn) accepted = true;
    } catch (const SingularMatrix&) {
      accepted = false;
    }
    if (accepted) {
      double norm = 0;
      for (const auto& c : xn) norm = std::max(norm, std::abs(c));
      if (!std::isfinite(norm) || norm > cfg.divergence_radius) {
        out.status = PathStatus::diverged;
        out.endpoint = std::move(xn);
        return out;
      }
      x = std::move(xn);
      t += dt;
      ++out.steps;
      if (++streak >= 3) {
        step = std::min(step * 2.0, cfg.max_step);
        streak = 0;
      }
      if (cfg.trace) out.trace.push_back({t, x, dt});
    } else {
      ++out.rejections;
      streak = 0;
      step /= 2.0;
      if (step < cfg.min_step) {
        // the step size collapsed before reaching t = 1; if the iterate
        // is already inside a target root's Newton basin, finish there,
        // otherwise the path is out of reach (a solution at infinity)
        auto J = system_jacobian(H.target());
        std::vector<Complex> z = newton_refine(H.target(), J, x, 20, cfg.endpoint_tol);
        double znorm = 0;
        for (const auto& c : z) znorm = std::max(znorm, std::abs(c));
        bool landed = false;
        if (std::isfinite(znorm) && znorm <= cfg.divergence_radius) {
          try {
            std::vector<Complex> s =
                lu_solve(evaluate_jacobian(J, z), H.target().evaluate(z));
            double sn = 0;
            for (const auto& c : s) sn = std::max(sn, std::abs(c));
            landed = sn <= 1e-6 * std::max(1.0, znorm);
          } catch (const SingularMatrix&) {
          }
        }
        out.status = landed ? PathStatus::converged : PathStatus::diverged;
        out.endpoint = landed ? std::move(z) : std::move(x);
        return out;
      }
    }
  }
  // polish the endpoint on the target system itself
  auto J = system_jacobian(H.target());
  x = newton_refine(H.target(), J, std::move(x), 20, cfg.endpoint_tol);
  double norm = 0;
  for (const auto& c : x) norm = std::max(norm, std::abs(c));
  out.status = (std::isfinite(norm) && norm <= cfg.divergence_radius) ? PathStatus::converged
                                                                      : PathStatus::diverged;
  out.endpoint = std::move(x);
  return out;
}

struct HomotopyResult {
  SolutionSet solutions;
  std::vector<PathResult> paths;  // one per start point, in order
};

// Total-degree homotopy solve with the gamma trick: random complex
// gamma of modulus 1 keeps every path off the discriminant with
// probability one. Endpoints closer than dedup_tol are re-tracked
// with a capped step before being declared duplicates.
inline HomotopyResult solve_homotopy(const SystemC& F, const TrackerConfig& cfg = {}) {
  if (!F.square()) throw std::invalid_argument("homotopy solve needs a square system");
  std::vector<int> degrees = F.degrees();
  SystemC G = total_degree_start(degrees);
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(0.0, 2.0 * std::numbers::pi);
  double theta = unif(rng);
  Complex gamma(std::cos(theta), std::sin(theta));
  Homotopy H(F, G, gamma);

  HomotopyResult out;
  auto starts = total_degree_start_points(degrees);
  out.solutions.paths_tracked = static_cast<int>(starts.size());
  for (const auto& s : starts) out.paths.push_back(track_path(H, s, cfg));

  // endpoints that collide usually mean one tracker jumped paths; a
  // re-run with a small maximum step separates genuine duplicates
  // from jumps
  auto colliding = [&](std::size_t a) {
    for (std::size_t b = 0; b < out.paths.size(); ++b) {
      if (b == a || out.paths[b].status != PathStatus::converged) continue;
      if (point_distance(out.paths[a].endpoint, out.paths[b].endpoint) < cfg.dedup_tol)
        return true;
    }
    return false;
  };
  TrackerConfig careful = cfg;
  careful.initial_step = std::min(cfg.initial_step, 1e-3);
  careful.max_step = 1e-3;
  careful.trace = false;
  for (std::size_t a = 0; a < out.paths.size(); ++a) {
    if (out.paths[a].status != PathStatus::converged || !colliding(a)) continue;
    PathResult redo = track_path(H, starts[a], careful);
    if (redo.status == PathStatus::converged) out.paths[a] = std::move(redo);
  }

  auto J = system_jacobian(F);
  for (std::size_t a = 0; a < out.paths.size(); ++a) {
    auto& p = out.paths[a];
    switch (p.status) {
      case PathStatus::diverged:
        ++out.solutions.paths_diverged;
        break;
      case PathStatus::failed:
        ++out.solutions.paths_failed;
        out.solutions.warnings.push_back("path " + std::to_string(a) +
                                         " stalled below the minimum step size");
        break;
      case PathStatus::converged: {
        bool dup = false;
        for (const auto& s : out.solutions.solutions)
          if (point_distance(s.point, p.endpoint) < cfg.dedup_tol) dup = true;
        if (dup) {
          out.solutions.warnings.push_back("path " + std::to_string(a) +
                                           " reached an already-known endpoint");
          break;
        }
        Solution sol;
        sol.point = newton_refine(F, J, p.endpoint);
        sol.residual = max_residual(F, sol.point);
        sol.is_real = point_is_real(sol.point, 1e-6);
        sol.provenance = "path " + std::to_string(a);
        out.solutions.solutions.push_back(std::move(sol));
        break;
      }
    }
  }
  return out;
}

inline HomotopyResult solve_homotopy(const SystemQ& F, const TrackerConfig& cfg = {}) {
  return solve_homotopy(to_complex(F), cfg);
}

}  // namespace polysolve

#endif

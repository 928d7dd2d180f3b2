#ifndef POLYSOLVE_EIGEN_HPP
#define POLYSOLVE_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "polysolve/matrix.hpp"

namespace polysolve {

struct EigenDecomposition {
  std::vector<Complex> eigenvalues;
  MatrixC eigenvectors;            // column i pairs with eigenvalue i
  std::vector<double> residuals;   // ||A v - lambda v|| / ||A||_F
};

struct EigenFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Parlett-Reinsch balancing with power-of-two scaling. Returns the
// diagonal D with A <- D^-1 A D.
inline std::vector<double> balance(MatrixC& A) {
  int n = A.rows();
  std::vector<double> d(n, 1.0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(A(j, i));
        r += std::abs(A(i, j));
      }
      if (c == 0 || r == 0) continue;
      double f = 1.0;
      double s = c + r;
      while (c < r / 2) {
        c *= 2;
        r /= 2;
        f *= 2;
      }
      while (c >= r * 2) {
        c /= 2;
        r *= 2;
        f /= 2;
      }
      if (c + r < 0.95 * s) {
        changed = true;
        d[i] *= f;
        for (int j = 0; j < n; ++j) A(i, j) /= f;
        for (int j = 0; j < n; ++j) A(j, i) *= f;
      }
    }
  }
  return d;
}

inline void hessenberg(MatrixC& A) {
  int n = A.rows();
  for (int k = 0; k < n - 2; ++k) {
    double scale = 0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(A(i, k));
    if (scale == 0) continue;
    // Householder vector for column k, rows k+1..n-1
    std::vector<Complex> v(n, Complex(0, 0));
    double norm2 = 0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = A(i, k);
      norm2 += std::norm(v[i]);
    }
    double alpha = std::sqrt(norm2);
    if (alpha == 0) continue;
    Complex phase = v[k + 1] == Complex(0, 0) ? Complex(1, 0) : v[k + 1] / std::abs(v[k + 1]);
    v[k + 1] += phase * alpha;
    double vnorm2 = 0;
    for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0) continue;
    // A <- (I - 2 v v^H / v^H v) A (same from the right)
    for (int j = 0; j < n; ++j) {
      Complex s(0, 0);
      for (int i = k + 1; i < n; ++i) s += std::conj(v[i]) * A(i, j);
      s *= 2.0 / vnorm2;
      for (int i = k + 1; i < n; ++i) A(i, j) -= s * v[i];
    }
    for (int i = 0; i < n; ++i) {
      Complex s(0, 0);
      for (int j = k + 1; j < n; ++j) s += A(i, j) * v[j];
      s *= 2.0 / vnorm2;
      for (int j = k + 1; j < n; ++j) A(i, j) -= s * std::conj(v[j]);
    }
    for (int i = k + 2; i < n; ++i) A(i, k) = Complex(0, 0);
  }
}

// Eigenvalue of [[a,b],[c,d]] closest to d (Wilkinson shift).
inline Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  Complex tr = a + d;
  Complex det = a * d - b * c;
  Complex disc = std::sqrt(tr * tr - 4.0 * det);
  Complex l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

// Shifted QR on an upper Hessenberg matrix; fills eigenvalues.
inline void qr_eigenvalues(MatrixC H, std::vector<Complex>& eig) {
  int n = H.rows();
  eig.assign(n, Complex(0, 0));
  const double deflate_tol = 1e-14;
  int hi = n - 1;
  long sweeps = 0;
  const long max_sweeps = 100L * std::max(n, 1);
  int stagnation = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = H(0, 0);
      break;
    }
    // deflation scan
    int lo = hi;
    while (lo > 0) {
      double s = std::abs(H(lo - 1, lo - 1)) + std::abs(H(lo, lo));
      if (s == 0) s = 1;
      if (std::abs(H(lo, lo - 1)) <= deflate_tol * s) {
        H(lo, lo - 1) = Complex(0, 0);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = H(hi, hi);
      --hi;
      stagnation = 0;
      continue;
    }
    if (++sweeps > max_sweeps)
      throw EigenFailure("QR iteration did not converge");
    Complex mu;
    if (++stagnation % 15 == 0) {
      mu = H(hi, hi) + Complex(std::abs(H(hi, hi - 1)), 0);  // exceptional shift
    } else {
      mu = wilkinson_shift(H(hi - 1, hi - 1), H(hi - 1, hi), H(hi, hi - 1), H(hi, hi));
    }
    // explicit shifted QR step on the active window via Givens
    for (int i = lo; i <= hi; ++i) H(i, i) -= mu;
    std::vector<Complex> ga(hi), gb(hi);
    std::vector<double> gr(hi);
    for (int i = lo; i < hi; ++i) {
      Complex a = H(i, i), b = H(i + 1, i);
      double r = std::hypot(std::abs(a), std::abs(b));
      if (r == 0) {
        ga[i] = Complex(1, 0);
        gb[i] = Complex(0, 0);
        gr[i] = 1;
        continue;
      }
      ga[i] = a;
      gb[i] = b;
      gr[i] = r;
      for (int j = i; j <= hi; ++j) {
        Complex x = H(i, j), y = H(i + 1, j);
        H(i, j) = (std::conj(a) * x + std::conj(b) * y) / r;
        H(i + 1, j) = (-b * x + a * y) / r;
      }
    }
    for (int i = lo; i < hi; ++i) {
      Complex a = ga[i], b = gb[i];
      double r = gr[i];
      int top = lo;
      for (int j = top; j <= std::min(i + 2, hi); ++j) {
        Complex x = H(j, i), y = H(j, i + 1);
        H(j, i) = (a * x + b * y) / r;
        H(j, i + 1) = (-std::conj(b) * x + std::conj(a) * y) / r;
      }
    }
    for (int i = lo; i <= hi; ++i) H(i, i) += mu;
  }
}

}  // namespace detail

// Dense nonsymmetric eigensolver: balancing, Hessenberg reduction,
// shifted QR for the eigenvalues, then inverse iteration on the
// balanced matrix for each eigenvector.
inline EigenDecomposition eigen(const MatrixC& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("eigen needs a square matrix");
  int n = A.rows();
  EigenDecomposition out;
  out.eigenvectors = MatrixC(n, n);
  if (n == 0) return out;

  MatrixC B = A;
  std::vector<double> d = detail::balance(B);
  MatrixC H = B;
  detail::hessenberg(H);
  detail::qr_eigenvalues(H, out.eigenvalues);

  double anorm = A.frobenius_norm();
  double scale = anorm > 0 ? anorm : 1.0;
  out.residuals.resize(n);
  for (int k = 0; k < n; ++k) {
    Complex lambda = out.eigenvalues[k];
    // perturb the shift so the factorization cannot be exactly singular
    Complex shift = lambda + Complex(scale * 1e-12, scale * 1e-12);
    MatrixC M = B;
    for (int i = 0; i < n; ++i) M(i, i) -= shift;
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = Complex(1.0 / std::sqrt(n), 1e-3 * (i + 1) / n);
    try {
      LuFactorization lu(std::move(M));
      for (int it = 0; it < 3; ++it) {
        v = lu.solve(v);
        double norm = 0;
        for (const auto& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm == 0 || !std::isfinite(norm)) break;
        for (auto& x : v) x /= norm;
      }
    } catch (const SingularMatrix&) {
      // exact singularity despite the perturbation; keep the start vector
    }
    // undo balancing
    double norm = 0;
    for (int i = 0; i < n; ++i) {
      v[i] *= d[i];
      norm += std::norm(v[i]);
    }
    norm = std::sqrt(norm);
    if (norm > 0)
      for (auto& x : v) x /= norm;
    std::vector<Complex> Av = A.apply(v);
    double res = 0;
    for (int i = 0; i < n; ++i) res += std::norm(Av[i] - lambda * v[i]);
    out.residuals[k] = std::sqrt(res) / scale;
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v[i];
  }
  return out;
}

}  // namespace polysolve

#endif

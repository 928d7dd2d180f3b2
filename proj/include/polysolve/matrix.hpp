#ifndef POLYSOLVE_MATRIX_HPP
#define POLYSOLVE_MATRIX_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polysolve/scalar.hpp"

namespace polysolve {

template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols,
                                        ScalarOps<S>::zero()) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const S& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (ScalarOps<S>::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<S> apply(const std::vector<S>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("shape mismatch");
    std::vector<S> y(rows_, ScalarOps<S>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& v : data_) {
      double a = ScalarOps<S>::abs_value(v);
      s += a * a;
    }
    return std::sqrt(s);
  }

 private:
  int rows_, cols_;
  std::vector<S> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixC = Matrix<Complex>;

// Exact reduced row echelon form. Pivot columns are chosen greedily in
// the order given by column_preference (indices into A's columns);
// earlier entries are preferred as pivots.
struct RrefResult {
  std::vector<int> pivot_columns;           // in elimination order
  std::vector<int> pivot_row_of_column;     // -1 for non-pivot columns
};

inline RrefResult rational_rref(MatrixQ& A, const std::vector<int>& column_preference) {
  RrefResult res;
  res.pivot_row_of_column.assign(A.cols(), -1);
  int r = 0;
  for (int c : column_preference) {
    if (r == A.rows()) break;
    int pivot = -1;
    for (int i = r; i < A.rows(); ++i)
      if (sgn(A(i, c)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < A.cols(); ++j) std::swap(A(pivot, j), A(r, j));
    Rational inv = 1 / A(r, c);
    for (int j = 0; j < A.cols(); ++j) A(r, j) *= inv;
    for (int i = 0; i < A.rows(); ++i) {
      if (i == r || sgn(A(i, c)) == 0) continue;
      Rational factor = A(i, c);
      for (int j = 0; j < A.cols(); ++j) A(i, j) -= factor * A(r, j);
    }
    res.pivot_columns.push_back(c);
    res.pivot_row_of_column[c] = r;
    ++r;
  }
  return res;
}

inline RrefResult rational_rref(MatrixQ& A) {
  std::vector<int> order(A.cols());
  for (int i = 0; i < A.cols(); ++i) order[i] = i;
  return rational_rref(A, order);
}

struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// LU factorization with partial pivoting, reusable for repeated solves
// (inverse iteration does many with the same matrix).
class LuFactorization {
 public:
  explicit LuFactorization(MatrixC A, double pivot_threshold = 0.0)
      : lu_(std::move(A)), perm_(lu_.rows()) {
    if (lu_.rows() != lu_.cols()) throw std::invalid_argument("LU needs a square matrix");
    int n = lu_.rows();
    double scale = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(lu_(i, j)));
    double tol = pivot_threshold > 0 ? pivot_threshold : scale * n * 1e-300;
    for (int i = 0; i < n; ++i) perm_[i] = i;
    for (int k = 0; k < n; ++k) {
      int p = k;
      double best = std::abs(lu_(k, k));
      for (int i = k + 1; i < n; ++i)
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          p = i;
        }
      if (best <= tol || best == 0.0) throw SingularMatrix("matrix singular to working tolerance");
      if (p != k) {
        for (int j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
        std::swap(perm_[p], perm_[k]);
      }
      for (int i = k + 1; i < n; ++i) {
        lu_(i, k) /= lu_(k, k);
        Complex m = lu_(i, k);
        if (m == Complex(0, 0)) continue;
        for (int j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
      }
    }
  }

  std::vector<Complex> solve(const std::vector<Complex>& b) const {
    int n = lu_.rows();
    std::vector<Complex> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[perm_[i]];
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) x[i] -= lu_(i, j) * x[j];
      x[i] /= lu_(i, i);
    }
    return x;
  }

 private:
  MatrixC lu_;
  std::vector<int> perm_;
};

inline std::vector<Complex> lu_solve(const MatrixC& A, const std::vector<Complex>& b) {
  return LuFactorization(A).solve(b);
}

}  // namespace polysolve

#endif

#ifndef POLYSOLVE_MACAULAY_HPP
#define POLYSOLVE_MACAULAY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "polysolve/eigen.hpp"
#include "polysolve/matrix.hpp"
#include "polysolve/solution.hpp"
#include "polysolve/system.hpp"

namespace polysolve {

struct TruncationTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // odometer enumeration
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m[var] = e;
      rec(var + 1, remaining - e);
      m[var] = 0;
    }
  };
  rec(0, d);
  return out;
}

// Rows are the shifts x^beta * f_i with deg <= d; columns are all
// monomials up to degree d, sorted descending so the candidate basis
// (the order-smallest monomials) sits rightmost.
template <class S>
struct MacaulayMatrix {
  std::vector<std::pair<int, Monomial>> row_labels;  // (poly index, shift)
  std::vector<Monomial> columns;
  Matrix<S> entries;
  MonomialOrder order;
  int truncation_degree = 0;
};

template <class S>
MacaulayMatrix<S> build_macaulay(const PolySystem<S>& F, int d, const MonomialOrder& order) {
  for (const auto& f : F.polys)
    if (f.is_zero() || f.degree() > d)
      throw std::invalid_argument("truncation degree below a system degree");
  MacaulayMatrix<S> M;
  M.order = order;
  M.truncation_degree = d;
  M.columns = monomials_up_to_degree(F.nvars, d);
  std::sort(M.columns.begin(), M.columns.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  std::map<Monomial, int> col_index;
  for (int j = 0; j < static_cast<int>(M.columns.size()); ++j) col_index[M.columns[j]] = j;

  for (int i = 0; i < F.size(); ++i) {
    int room = d - F.polys[i].degree();
    for (const auto& shift : monomials_up_to_degree(F.nvars, room))
      M.row_labels.emplace_back(i, shift);
  }
  // shifts in display order (degree ascending, order-descending within
  // a degree): f, xf, yf, ...
  std::sort(M.row_labels.begin(), M.row_labels.end(),
            [&](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              if (a.second.degree() != b.second.degree())
                return a.second.degree() < b.second.degree();
              return order.greater(a.second, b.second);
            });

  M.entries = Matrix<S>(static_cast<int>(M.row_labels.size()),
                        static_cast<int>(M.columns.size()));
  for (int r = 0; r < static_cast<int>(M.row_labels.size()); ++r) {
    const auto& [i, shift] = M.row_labels[r];
    for (const auto& [m, c] : F.polys[i].terms()) M.entries(r, col_index.at(m * shift)) = c;
  }
  return M;
}

// Monomial basis of R/I together with the normal-form table
// NF(non-basis monomial) expressed on the basis.
template <class S>
struct QuotientBasis {
  int nvars = 0;
  MonomialOrder order;
  std::vector<Monomial> basis;  // degree ascending, order-descending within a degree
  std::map<Monomial, std::vector<S>> nf_table;  // non-basis monomials only
  int truncation_degree = 0;

  int dimension() const { return static_cast<int>(basis.size()); }

  int basis_index(const Monomial& m) const {
    for (int i = 0; i < dimension(); ++i)
      if (basis[i] == m) return i;
    return -1;
  }

  std::vector<S> normal_form(const Monomial& m) const {
    int bi = basis_index(m);
    if (bi >= 0) {
      std::vector<S> e(dimension(), ScalarOps<S>::zero());
      e[bi] = ScalarOps<S>::one();
      return e;
    }
    auto it = nf_table.find(m);
    if (it == nf_table.end())
      throw TruncationTooSmall("monomial outside the truncated normal form");
    return it->second;
  }
};

namespace detail {

inline void sort_basis_display(std::vector<Monomial>& basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.greater(a, b);
  });
}

}  // namespace detail

// Exact Gauss-Jordan elimination preferring pivots on order-largest
// columns, so the basis consists of the order-smallest independent
// monomials. Returns the basis plus the fully reduced matrix (rows
// truncated to the rank).
inline std::pair<QuotientBasis<Rational>, MatrixQ> reduce_and_select_basis(
    const MacaulayMatrix<Rational>& M) {
  MatrixQ A = M.entries;
  RrefResult rr = rational_rref(A);  // columns are already order-descending
  int rank = static_cast<int>(rr.pivot_columns.size());
  QuotientBasis<Rational> Q;
  Q.nvars = M.columns.empty() ? 0 : M.columns[0].nvars();
  Q.order = M.order;
  Q.truncation_degree = M.truncation_degree;
  // restrict the basis to degree <= d-1: dependent top-degree columns
  // correspond to solutions at infinity and carry no affine data, and
  // normal forms of lower-degree pivots can never touch them (columns
  // are degree-descending)
  std::vector<int> basis_cols, dropped_cols;
  for (int j = 0; j < static_cast<int>(M.columns.size()); ++j) {
    if (rr.pivot_row_of_column[j] >= 0) continue;
    if (M.columns[j].degree() < M.truncation_degree)
      basis_cols.push_back(j);
    else
      dropped_cols.push_back(j);
  }
  if (basis_cols.empty()) throw InconsistentSystem("quotient dimension 0: no solutions");
  for (int j : basis_cols) Q.basis.push_back(M.columns[j]);
  detail::sort_basis_display(Q.basis, M.order);
  for (int j : rr.pivot_columns) {
    int r = rr.pivot_row_of_column[j];
    std::vector<Rational> nf(Q.basis.size(), Rational(0));
    for (std::size_t k = 0; k < Q.basis.size(); ++k) {
      // column of this basis monomial in A
      int col = -1;
      for (int c : basis_cols)
        if (M.columns[c] == Q.basis[k]) {
          col = c;
          break;
        }
      nf[k] = -A(r, col);
    }
    Q.nf_table[M.columns[j]] = std::move(nf);
  }
  for (int j : dropped_cols)
    Q.nf_table[M.columns[j]] = std::vector<Rational>(Q.basis.size(), Rational(0));
  MatrixQ reduced(rank, A.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < A.cols(); ++j) reduced(i, j) = A(i, j);
  return {Q, reduced};
}

// Numerical counterpart: Householder elimination walking the columns
// in descending monomial order, treating columns whose remaining mass
// falls below rank_tol * scale as dependent (basis candidates).
inline QuotientBasis<Complex> reduce_and_select_basis_complex(const MacaulayMatrix<Complex>& M,
                                                              double rank_tol = 1e-10) {
  MatrixC A = M.entries;
  int m = A.rows(), n = A.cols();
  double scale = 0;
  for (int j = 0; j < n; ++j) {
    double cn = 0;
    for (int i = 0; i < m; ++i) cn += std::norm(A(i, j));
    scale = std::max(scale, std::sqrt(cn));
  }
  if (scale == 0) throw std::invalid_argument("zero Macaulay matrix");
  std::vector<int> pivot_cols, basis_cols;
  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    double cn = 0;
    for (int i = r; i < m; ++i) cn += std::norm(A(i, j));
    cn = std::sqrt(cn);
    if (cn <= rank_tol * scale) {
      basis_cols.push_back(j);
      continue;
    }
    // Householder reflection zeroing column j below row r
    std::vector<Complex> v(m, Complex(0, 0));
    for (int i = r; i < m; ++i) v[i] = A(i, j);
    Complex phase = v[r] == Complex(0, 0) ? Complex(1, 0) : v[r] / std::abs(v[r]);
    v[r] += phase * cn;
    double vnorm2 = 0;
    for (int i = r; i < m; ++i) vnorm2 += std::norm(v[i]);
    for (int jj = j; jj < n; ++jj) {
      Complex s(0, 0);
      for (int i = r; i < m; ++i) s += std::conj(v[i]) * A(i, jj);
      s *= 2.0 / vnorm2;
      for (int i = r; i < m; ++i) A(i, jj) -= s * v[i];
    }
    pivot_cols.push_back(j);
    ++r;
  }
  for (int j = static_cast<int>(pivot_cols.size()) + static_cast<int>(basis_cols.size()); j < n;
       ++j)
    basis_cols.push_back(j);  // columns after rank exhaustion
  int rank = r;
  // drop dependent top-degree columns: they correspond to solutions at
  // infinity and no lower-degree normal form can reference them, so
  // removing the coordinates is a clean projection onto the affine part
  std::vector<int> dropped_cols;
  for (int j : basis_cols)
    if (M.columns[j].degree() >= M.truncation_degree) dropped_cols.push_back(j);
  std::erase_if(basis_cols,
                [&](int j) { return M.columns[j].degree() >= M.truncation_degree; });
  if (basis_cols.empty()) throw InconsistentSystem("quotient dimension 0: no solutions");

  QuotientBasis<Complex> Q;
  Q.nvars = M.columns.empty() ? 0 : M.columns[0].nvars();
  Q.order = M.order;
  Q.truncation_degree = M.truncation_degree;
  for (int j : basis_cols) Q.basis.push_back(M.columns[j]);
  detail::sort_basis_display(Q.basis, M.order);
  std::vector<int> basis_pos(Q.basis.size());
  for (std::size_t k = 0; k < Q.basis.size(); ++k) {
    for (int c : basis_cols)
      if (M.columns[c] == Q.basis[k]) basis_pos[k] = c;
  }
  // back-substitute: row i of the triangular factor expresses pivot
  // monomial i in the remaining columns
  for (int i = rank - 1; i >= 0; --i) {
    std::vector<Complex> nf(Q.basis.size(), Complex(0, 0));
    for (std::size_t k = 0; k < Q.basis.size(); ++k) nf[k] = -A(i, basis_pos[k]);
    // eliminate contributions of later pivot columns
    for (int i2 = rank - 1; i2 > i; --i2) {
      Complex c = A(i, pivot_cols[i2]);
      if (c == Complex(0, 0)) continue;
      const auto& nf2 = Q.nf_table.at(M.columns[pivot_cols[i2]]);
      for (std::size_t k = 0; k < nf.size(); ++k) nf[k] -= c * nf2[k];
    }
    Complex piv = A(i, pivot_cols[i]);
    for (auto& x : nf) x /= piv;
    Q.nf_table[M.columns[pivot_cols[i]]] = std::move(nf);
  }
  for (int j : dropped_cols)
    Q.nf_table[M.columns[j]] = std::vector<Complex>(Q.basis.size(), Complex(0, 0));
  return Q;
}

// delta x delta matrix of multiplication by g on R/I in the basis.
template <class S>
Matrix<S> multiplication_matrix(const QuotientBasis<S>& Q, const Polynomial<S>& g) {
  int delta = Q.dimension();
  Matrix<S> M(delta, delta);
  for (int i = 0; i < delta; ++i) {
    for (const auto& [m, c] : g.terms()) {
      std::vector<S> nf = Q.normal_form(m * Q.basis[i]);
      for (int j = 0; j < delta; ++j) M(j, i) += c * nf[j];
    }
  }
  return M;
}

// Companion matrix of a univariate polynomial: the multiplication
// matrix M_x in the basis {1, x, ..., x^{d-1}}.
template <class S>
Matrix<S> companion_matrix(const Polynomial<S>& f) {
  if (f.nvars() != 1) throw DimensionMismatch("companion matrix needs a univariate polynomial");
  int d = f.degree();
  if (d < 1) throw std::invalid_argument("companion matrix needs degree >= 1");
  Monomial lead(1);
  lead[0] = d;
  S cd = f.coefficient(lead);
  Matrix<S> C(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = ScalarOps<S>::one();
  for (int i = 0; i < d; ++i) {
    Monomial mi(1);
    mi[0] = i;
    C(i, d - 1) = -(f.coefficient(mi) / cd);
  }
  return C;
}

struct EigenSolveConfig {
  unsigned seed = 20220905;
  double real_tol = 1e-6;
  double residual_tol = 1e-8;
  double rank_tol = 1e-10;
  int max_escalation = 3;
  double cluster_tol = 1e-8;
};

// Macaulay truncation degree for a square system: sum of (d_i - 1)
// plus one, never below the largest equation degree.
template <class S>
int macaulay_degree(const PolySystem<S>& F) {
  int s = 0;
  for (const auto& f : F.polys) s += f.degree() - 1;
  int d = std::max(s + 1, 1);
  for (const auto& f : F.polys) d = std::max(d, f.degree());
  return d;
}

// Truncated-normal-form construction with degree escalation: accept
// the first degree at which the quotient dimension agrees with the
// next degree up.
inline QuotientBasis<Complex> stable_quotient_basis(const SystemC& F, const EigenSolveConfig& cfg,
                                                    const MonomialOrder& order) {
  int d0 = macaulay_degree(F);
  QuotientBasis<Complex> prev = reduce_and_select_basis_complex(build_macaulay(F, d0, order),
                                                                cfg.rank_tol);
  for (int d = d0 + 1; d <= d0 + cfg.max_escalation + 1; ++d) {
    QuotientBasis<Complex> cur =
        reduce_and_select_basis_complex(build_macaulay(F, d, order), cfg.rank_tol);
    if (cur.dimension() == prev.dimension()) {
      bool closed = true;
      for (const auto& b : cur.basis)
        if (b.degree() >= d) closed = false;
      if (closed) return cur;
    }
    prev = std::move(cur);
  }
  throw TruncationTooSmall("quotient dimension did not stabilize within the degree cap");
}

// Eigenvalue-based solver: multiplication matrix of a random linear
// form, left eigenvectors, coordinate extraction, Newton refinement.
inline SolutionSet solve_eigen(const SystemC& F, const EigenSolveConfig& cfg = {}) {
  MonomialOrder order = MonomialOrder::grlex(F.nvars);
  SolutionSet out;
  QuotientBasis<Complex> Q;
  try {
    Q = stable_quotient_basis(F, cfg, order);
  } catch (const InconsistentSystem&) {
    return out;  // no solutions
  }
  int n = F.nvars, delta = Q.dimension();
  Monomial one(n);
  int idx1 = Q.basis_index(one);
  if (idx1 < 0) throw std::runtime_error("basis lacks the monomial 1; cannot normalize");

  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  PolyC h(n);
  for (int j = 0; j < n; ++j)
    h = h + Complex(unif(rng), 0.0) * PolyC::variable(n, j);
  MatrixC Mh = multiplication_matrix(Q, h);
  EigenDecomposition ed = eigen(Mh.transpose());

  // clustered spectrum hints at a multiple zero, which the radicality
  // assumption excludes; report it rather than silently merging
  double hscale = 0;
  for (const auto& ev : ed.eigenvalues) hscale = std::max(hscale, std::abs(ev));
  for (std::size_t a = 0; a < ed.eigenvalues.size(); ++a)
    for (std::size_t b = a + 1; b < ed.eigenvalues.size(); ++b)
      if (std::abs(ed.eigenvalues[a] - ed.eigenvalues[b]) <=
          cfg.cluster_tol * std::max(1.0, hscale)) {
        out.warnings.push_back("clustered eigenvalues: input may be non-radical");
        a = ed.eigenvalues.size();
        break;
      }

  std::vector<int> coord_idx(n, -1);
  bool all_coords_in_basis = true;
  for (int j = 0; j < n; ++j) {
    Monomial xj(n);
    xj[j] = 1;
    coord_idx[j] = Q.basis_index(xj);
    if (coord_idx[j] < 0) all_coords_in_basis = false;
  }
  std::vector<MatrixC> Mx;
  if (!all_coords_in_basis) {
    for (int j = 0; j < n; ++j) {
      PolyC xj = PolyC::variable(n, j);
      Mx.push_back(multiplication_matrix(Q, xj).transpose());
    }
  }

  auto J = system_jacobian(F);
  for (int k = 0; k < delta; ++k) {
    std::vector<Complex> w(delta);
    for (int i = 0; i < delta; ++i) w[i] = ed.eigenvectors(i, k);
    if (std::abs(w[idx1]) < 1e-12) {
      out.warnings.push_back("eigenvector with vanishing 1-entry skipped");
      continue;
    }
    Complex w1 = w[idx1];
    for (auto& x : w) x /= w1;
    std::vector<Complex> z(n);
    if (all_coords_in_basis) {
      for (int j = 0; j < n; ++j) z[j] = w[coord_idx[j]];
    } else {
      int kmax = 0;
      for (int i = 1; i < delta; ++i)
        if (std::abs(w[i]) > std::abs(w[kmax])) kmax = i;
      for (int j = 0; j < n; ++j) {
        std::vector<Complex> Mw = Mx[j].apply(w);
        z[j] = Mw[kmax] / w[kmax];
      }
    }
    z = newton_refine(F, J, std::move(z));
    Solution sol;
    sol.residual = max_residual(F, z);
    sol.point = std::move(z);
    sol.is_real = point_is_real(sol.point, cfg.real_tol);
    sol.provenance = "eigen";
    if (sol.residual <= cfg.residual_tol)
      out.solutions.push_back(std::move(sol));
    else
      out.warnings.push_back("eigen candidate rejected: residual " +
                             std::to_string(sol.residual));
  }
  return out;
}

inline SolutionSet solve_eigen(const SystemQ& F, const EigenSolveConfig& cfg = {}) {
  return solve_eigen(to_complex(F), cfg);
}

}  // namespace polysolve

#endif

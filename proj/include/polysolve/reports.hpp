#ifndef POLYSOLVE_REPORTS_HPP
#define POLYSOLVE_REPORTS_HPP

#include <string>
#include <vector>

#include "polysolve/macaulay.hpp"
#include "polysolve/parser.hpp"

namespace polysolve {

namespace detail {

inline std::string csv_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s = format_monomial(m, vars);
  return s.empty() ? "1" : s;
}

template <class WriteCell>
std::string csv_matrix(const std::string& name, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels, int rows, int cols,
                       WriteCell cell) {
  std::string out = "matrix," + name + "\n";
  for (const auto& c : col_labels) out += "," + c;
  out += "\n";
  for (int i = 0; i < rows; ++i) {
    out += row_labels[i];
    for (int j = 0; j < cols; ++j) out += "," + cell(i, j);
    out += "\n";
  }
  return out;
}

}  // namespace detail

// CSV dump of the exact rational Macaulay computation: the raw matrix,
// its Gauss-Jordan reduction, and the multiplication matrix of every
// variable. Columns are printed with the eliminated (pivot) monomials
// first, then the quotient basis in degree-ascending display order.
inline std::string dump_macaulay_csv(const SystemQ& F, const std::vector<std::string>& vars) {
  MonomialOrder order = MonomialOrder::grlex(F.nvars);
  int d = macaulay_degree(F);
  MacaulayMatrix<Rational> M = build_macaulay(F, d, order);
  auto [Q, reduced] = reduce_and_select_basis(M);

  // display permutation of the columns: pivots (already descending),
  // then the basis in its display order
  std::vector<int> perm;
  std::vector<bool> is_basis(M.columns.size(), false);
  for (const auto& b : Q.basis)
    for (std::size_t j = 0; j < M.columns.size(); ++j)
      if (M.columns[j] == b) is_basis[j] = true;
  for (std::size_t j = 0; j < M.columns.size(); ++j)
    if (!is_basis[j]) perm.push_back(static_cast<int>(j));
  for (const auto& b : Q.basis)
    for (std::size_t j = 0; j < M.columns.size(); ++j)
      if (M.columns[j] == b) perm.push_back(static_cast<int>(j));

  std::vector<std::string> col_labels;
  for (int j : perm) col_labels.push_back(detail::csv_monomial(M.columns[j], vars));

  std::vector<std::string> row_labels;
  for (const auto& [i, shift] : M.row_labels) {
    std::string f = "f" + std::to_string(i + 1);
    row_labels.push_back(shift.is_one() ? f : format_monomial(shift, vars) + "*" + f);
  }
  std::string out = detail::csv_matrix(
      "M", row_labels, col_labels, M.entries.rows(), static_cast<int>(perm.size()),
      [&](int i, int j) { return to_string(M.entries(i, perm[j])); });

  std::vector<std::string> red_labels;
  for (int i = 0; i < reduced.rows(); ++i) {
    PolyQ p(F.nvars);
    for (std::size_t j = 0; j < M.columns.size(); ++j)
      p.add_term(M.columns[j], reduced(i, static_cast<int>(j)));
    red_labels.push_back(format_polynomial(p, vars));
  }
  out += detail::csv_matrix(
      "Mreduced", red_labels, col_labels, reduced.rows(), static_cast<int>(perm.size()),
      [&](int i, int j) { return to_string(reduced(i, perm[j])); });

  std::vector<std::string> basis_labels;
  for (const auto& b : Q.basis) basis_labels.push_back(detail::csv_monomial(b, vars));
  for (int v = 0; v < F.nvars; ++v) {
    MatrixQ Mv = multiplication_matrix(Q, PolyQ::variable(F.nvars, v));
    Monomial xv(F.nvars);
    xv[v] = 1;
    std::vector<std::string> shifted;
    for (const auto& b : Q.basis) shifted.push_back(detail::csv_monomial(xv * b, vars));
    out += detail::csv_matrix("M_" + vars[v], basis_labels, shifted, Mv.rows(), Mv.cols(),
                              [&](int i, int j) { return to_string(Mv(i, j)); });
  }
  return out;
}

}  // namespace polysolve

#endif

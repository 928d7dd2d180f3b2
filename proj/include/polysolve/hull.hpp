#ifndef POLYSOLVE_HULL_HPP
#define POLYSOLVE_HULL_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "polysolve/monomial.hpp"
#include "polysolve/polynomial.hpp"
#include "polysolve/scalar.hpp"

namespace polysolve {

using LatticePoint = std::vector<long>;  // long: directly convertible to GMP types

// Finite exponent set A in N^n.
struct Support {
  int dim = 0;
  std::vector<LatticePoint> points;

  Support() = default;
  Support(int d, std::vector<LatticePoint> pts) : dim(d), points(std::move(pts)) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw std::invalid_argument("empty support");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("support point of wrong dimension");
  }

  template <class S>
  static Support of(const Polynomial<S>& f) {
    std::vector<LatticePoint> pts;
    for (const auto& m : f.support()) {
      LatticePoint p(m.e.begin(), m.e.end());
      pts.push_back(std::move(p));
    }
    return Support(f.nvars(), std::move(pts));
  }
};

struct DimensionCapExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

namespace geom {

// Exact determinant, fraction-free Bareiss.
inline mpz_class det(std::vector<std::vector<mpz_class>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Orientation of q against the affine hyperplane through f0..f_{d-1}.
inline int orientation(const std::vector<const LatticePoint*>& facet, const LatticePoint& q,
                       mpz_class* value = nullptr) {
  int d = static_cast<int>(q.size());
  std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d));
  for (int r = 0; r + 1 < d; ++r)
    for (int c = 0; c < d; ++c) m[r][c] = (*facet[r + 1])[c] - (*facet[0])[c];
  for (int c = 0; c < d; ++c) m[d - 1][c] = q[c] - (*facet[0])[c];
  mpz_class v = det(std::move(m));
  if (value) *value = v;
  return sgn(v);
}

// Exact membership test p in conv(points), phase-1 simplex with
// Dantzig pricing and a Bland fallback for termination.
inline bool in_convex_hull(const LatticePoint& p, const std::vector<LatticePoint>& points,
                           const std::vector<int>& skip = {}) {
  int d = static_cast<int>(p.size());
  std::vector<int> cols;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) cols.push_back(i);
  int N = static_cast<int>(cols.size());
  if (N == 0) return false;
  int rows = d + 1;
  int total = N + rows;  // lambda columns then artificials
  // tableau[r][c], rhs in tableau[r][total]
  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(total + 1, Rational(0)));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < N; ++j) T[r][j] = Rational(points[cols[j]][r] - p[r]);
  for (int j = 0; j < N; ++j) T[d][j] = 1;
  T[d][total] = 1;
  // make rhs nonnegative (rows 0..d-1 have rhs 0 already)
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    basis[r] = N + r;
    T[r][N + r] = 1;
  }
  auto reduced_cost = [&](int j) {
    // cost 0 for lambdas, 1 for artificials; z_j = sum over rows with
    // artificial basis cost
    Rational z(0);
    for (int r = 0; r < rows; ++r)
      if (basis[r] >= N) z += T[r][j];
    Rational c = j >= N ? Rational(1) : Rational(0);
    return c - z;
  };
  long iter = 0;
  const long bland_after = 200;
  while (true) {
    ++iter;
    int enter = -1;
    if (iter < bland_after) {
      Rational best(0);
      for (int j = 0; j < N; ++j) {
        Rational rc = reduced_cost(j);
        if (rc < best) {
          best = rc;
          enter = j;
        }
      }
    } else {
      for (int j = 0; j < N; ++j)
        if (reduced_cost(j) < 0) {
          enter = j;
          break;
        }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio(0);
    for (int r = 0; r < rows; ++r) {
      if (sgn(T[r][enter]) <= 0) continue;
      Rational ratio = T[r][total] / T[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave < 0) return false;  // unbounded cannot happen in phase 1
    Rational piv = T[leave][enter];
    for (int c = 0; c <= total; ++c) T[leave][c] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || sgn(T[r][enter]) == 0) continue;
      Rational f = T[r][enter];
      for (int c = 0; c <= total; ++c) T[r][c] -= f * T[leave][c];
    }
    basis[leave] = enter;
  }
  Rational objective(0);
  for (int r = 0; r < rows; ++r)
    if (basis[r] >= N) objective += T[r][total];
  return sgn(objective) == 0;
}

}  // namespace geom

// Convex hull of a lattice point set with exact volume and a covering
// triangulation. Degenerate (lower-dimensional) hulls carry Vol = 0,
// an empty triangulation, and still report the exact vertex set.
struct NewtonPolytope {
  int dim = 0;
  std::vector<LatticePoint> vertices;  // minimal vertex set
  std::vector<LatticePoint> tri_points;
  std::vector<std::vector<int>> simplices;  // index tuples into tri_points
  Rational vol = Rational(0);               // Euclidean volume
  bool degenerate = false;

  // n! * Vol, an integer for lattice polytopes
  long normalized_volume() const {
    Rational nv = vol;
    for (int k = 2; k <= dim; ++k) nv *= k;
    if (nv.get_den() != 1) throw std::logic_error("normalized volume is not integral");
    return nv.get_num().get_si();
  }
};

namespace geom {

struct FacetRecord {
  int opposite;  // reference point on the inside
};

inline std::vector<int> affine_basis(const std::vector<LatticePoint>& pts, int d) {
  std::vector<int> chosen = {0};
  // grow a set of affinely independent points via exact rank checks
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i < static_cast<int>(pts.size()) && static_cast<int>(chosen.size()) < d + 1;
       ++i) {
    std::vector<Rational> cand(d);
    for (int c = 0; c < d; ++c) cand[c] = Rational(pts[i][c] - pts[chosen[0]][c]);
    // eliminate against accepted rows
    std::vector<Rational> v = cand;
    for (const auto& row : rows) {
      int lead = -1;
      for (int c = 0; c < d; ++c)
        if (sgn(row[c]) != 0) {
          lead = c;
          break;
        }
      if (lead >= 0 && sgn(v[lead]) != 0) {
        Rational f = v[lead] / row[lead];
        for (int c = 0; c < d; ++c) v[c] -= f * row[c];
      }
    }
    bool nonzero = false;
    for (int c = 0; c < d; ++c)
      if (sgn(v[c]) != 0) nonzero = true;
    if (nonzero) {
      rows.push_back(v);
      // keep rows in echelon-ish form: reduce previous rows is not
      // needed for rank growth, leading entries suffice
      chosen.push_back(i);
    }
  }
  return chosen;
}

}  // namespace geom

// filter_vertices: when false, the vertex list may contain boundary
// non-vertices (used for intermediate Minkowski stages, where only
// hull membership and volume matter).
inline NewtonPolytope convex_hull(const std::vector<LatticePoint>& input, int dim,
                                  bool filter_vertices = true) {
  if (dim > 6) throw DimensionCapExceeded("convex hull capped at dimension 6");
  std::vector<LatticePoint> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  NewtonPolytope P;
  P.dim = dim;
  if (pts.empty()) throw std::invalid_argument("empty point set");

  std::vector<int> base = geom::affine_basis(pts, dim);
  if (static_cast<int>(base.size()) < dim + 1) {
    P.degenerate = true;
    P.vol = Rational(0);
    // minimal vertex set still makes sense for a flat hull
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
      if (!geom::in_convex_hull(pts[i], pts, {i})) P.vertices.push_back(pts[i]);
    return P;
  }

  // incremental (beneath-beyond) placing triangulation
  const int d = dim;
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (std::find(base.begin(), base.end(), i) == base.end()) order.push_back(i);

  std::vector<std::vector<int>> simplices;
  std::map<std::vector<int>, geom::FacetRecord> boundary;  // key: sorted facet
  mpz_class detsum = 0;

  auto simplex_det = [&](const std::vector<int>& s) {
    std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m[r][c] = pts[s[r + 1]][c] - pts[s[0]][c];
    return geom::det(std::move(m));
  };

  auto add_simplex = [&](std::vector<int> s) {
    mpz_class dv = simplex_det(s);
    detsum += abs(dv);
    for (int skip = 0; skip <= d; ++skip) {
      std::vector<int> facet;
      for (int i = 0; i <= d; ++i)
        if (i != skip) facet.push_back(s[i]);
      std::sort(facet.begin(), facet.end());
      auto it = boundary.find(facet);
      if (it != boundary.end())
        boundary.erase(it);  // now interior, shared by two simplices
      else
        boundary.emplace(std::move(facet), geom::FacetRecord{s[skip]});
    }
    simplices.push_back(std::move(s));
  };

  add_simplex(base);

  for (int pi : order) {
    const LatticePoint& p = pts[pi];
    // strictly visible boundary facets
    std::vector<std::pair<std::vector<int>, int>> visible;
    for (const auto& [facet, rec] : boundary) {
      std::vector<const LatticePoint*> fpts;
      for (int v : facet) fpts.push_back(&pts[v]);
      int s_ref = geom::orientation(fpts, pts[rec.opposite]);
      if (s_ref == 0) continue;  // degenerate facet, never visible
      int s_p = geom::orientation(fpts, p);
      if (s_p != 0 && s_p != s_ref) visible.emplace_back(facet, rec.opposite);
    }
    if (visible.empty()) continue;  // inside or on the boundary
    for (const auto& [facet, ref] : visible) {
      std::vector<int> s = facet;
      s.push_back(pi);
      add_simplex(std::move(s));
    }
  }

  Rational fact(1);
  for (int k = 2; k <= d; ++k) fact *= k;
  P.vol = Rational(detsum) / fact;

  std::set<int> candidate_set;
  for (const auto& [facet, rec] : boundary)
    for (int v : facet) candidate_set.insert(v);
  std::vector<LatticePoint> candidates;
  for (int v : candidate_set) candidates.push_back(pts[v]);
  if (filter_vertices) {
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i)
      if (!geom::in_convex_hull(candidates[i], candidates, {i}))
        P.vertices.push_back(candidates[i]);
  } else {
    P.vertices = std::move(candidates);
  }
  P.tri_points = pts;
  P.simplices = std::move(simplices);
  return P;
}

inline NewtonPolytope convex_hull(const Support& A, bool filter_vertices = true) {
  return convex_hull(A.points, A.dim, filter_vertices);
}

// Hull of pairwise vertex sums.
inline NewtonPolytope minkowski_sum(const NewtonPolytope& P, const NewtonPolytope& Q,
                                    bool filter_vertices = true) {
  if (P.dim != Q.dim) throw DimensionMismatch("Minkowski sum needs equal dimensions");
  const auto& vp = P.vertices.empty() ? P.tri_points : P.vertices;
  const auto& vq = Q.vertices.empty() ? Q.tri_points : Q.vertices;
  std::vector<LatticePoint> sums;
  sums.reserve(vp.size() * vq.size());
  for (const auto& a : vp)
    for (const auto& b : vq) {
      LatticePoint s(P.dim);
      for (int i = 0; i < P.dim; ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return convex_hull(sums, P.dim, filter_vertices);
}

inline Rational volume(const NewtonPolytope& P) { return P.vol; }

inline long normalized_volume(const Support& A) {
  return convex_hull(A, false).normalized_volume();
}

}  // namespace polysolve

#endif

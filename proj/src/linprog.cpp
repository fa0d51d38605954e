#include "valgeo/linprog.hpp"

#include <limits>
#include <vector>

namespace valgeo {

namespace {

constexpr double kEps = 1e-9;

// Tableau simplex over the standard form max c.y, M y = rhs, y >= 0.
// Columns are [x+, x-, slack, artificial]; basis starts on slacks where the
// row was not negated, artificials elsewhere.
struct Tableau {
  Eigen::MatrixXd M;
  Eigen::VectorXd rhs;
  std::vector<int> basis;

  // Pivot so that column `col` becomes basic in row `row`.
  void pivot(int row, int col) {
    double piv = M(row, col);
    M.row(row) /= piv;
    rhs(row) /= piv;
    for (int r = 0; r < M.rows(); ++r) {
      if (r == row) continue;
      double f = M(r, col);
      if (f == 0.0) continue;
      M.row(r) -= f * M.row(row);
      rhs(r) -= f * rhs(row);
    }
    basis[row] = col;
  }

  // Maximize obj over the current feasible basis. Returns false on
  // unboundedness. Bland's rule: smallest eligible index always.
  bool optimize(Eigen::VectorXd& obj, double& value, int ncols) {
    int m = static_cast<int>(M.rows());
    for (;;) {
      // Reduced costs: obj - obj_B * M.
      Eigen::VectorXd red = obj.head(ncols);
      for (int r = 0; r < m; ++r) {
        double cb = obj(basis[r]);
        if (cb != 0.0) red -= cb * M.row(r).head(ncols).transpose();
      }
      int enter = -1;
      for (int jc = 0; jc < ncols; ++jc)
        if (red(jc) > kEps) {
          enter = jc;
          break;
        }
      if (enter < 0) {
        value = 0.0;
        for (int r = 0; r < m; ++r) value += obj(basis[r]) * rhs(r);
        return true;
      }
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        double a = M(r, enter);
        if (a > kEps) {
          double ratio = rhs(r) / a;
          if (ratio < best - kEps ||
              (ratio < best + kEps && (leave < 0 || basis[r] < basis[leave]))) {
            best = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_solve(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                  const Eigen::VectorXd& b) {
  int m = static_cast<int>(A.rows());
  int n = static_cast<int>(A.cols());
  int nreal = 2 * n + m;  // x+, x-, slacks
  int ntot = nreal + m;   // + artificials

  Tableau t;
  t.M.setZero(m, ntot);
  t.rhs.resize(m);
  t.basis.assign(m, -1);

  for (int r = 0; r < m; ++r) {
    double sgn = (b(r) < 0) ? -1.0 : 1.0;
    t.M.row(r).segment(0, n) = sgn * A.row(r);
    t.M.row(r).segment(n, n) = -sgn * A.row(r);
    t.M(r, 2 * n + r) = sgn;
    t.rhs(r) = sgn * b(r);
    if (sgn > 0) {
      t.basis[r] = 2 * n + r;
    } else {
      t.M(r, nreal + r) = 1.0;
      t.basis[r] = nreal + r;
    }
  }

  LpResult res;
  res.x.setZero(n);

  // Phase 1: drive artificials to zero.
  bool need_phase1 = false;
  for (int r = 0; r < m; ++r) need_phase1 |= (t.basis[r] >= nreal);
  if (need_phase1) {
    Eigen::VectorXd obj = Eigen::VectorXd::Zero(ntot);
    for (int jc = nreal; jc < ntot; ++jc) obj(jc) = -1.0;
    double v = 0.0;
    t.optimize(obj, v, ntot);
    if (v < -kEps) {
      res.status = LpResult::kInfeasible;
      return res;
    }
    // Pivot any remaining artificial out of the basis if possible.
    for (int r = 0; r < m; ++r) {
      if (t.basis[r] < nreal) continue;
      int col = -1;
      for (int jc = 0; jc < nreal; ++jc)
        if (std::abs(t.M(r, jc)) > kEps) {
          col = jc;
          break;
        }
      if (col >= 0) t.pivot(r, col);
      // A row with no real pivot is redundant; its rhs is ~0, leave it.
    }
  }

  // Phase 2.
  Eigen::VectorXd obj = Eigen::VectorXd::Zero(ntot);
  obj.segment(0, n) = c;
  obj.segment(n, n) = -c;
  double value = 0.0;
  if (!t.optimize(obj, value, nreal)) {
    res.status = LpResult::kUnbounded;
    return res;
  }
  res.status = LpResult::kOptimal;
  res.value = value;
  for (int r = 0; r < m; ++r) {
    int bcol = t.basis[r];
    if (bcol < n)
      res.x(bcol) += t.rhs(r);
    else if (bcol < 2 * n)
      res.x(bcol - n) -= t.rhs(r);
  }
  return res;
}

bool in_convex_hull(const Eigen::VectorXd& p,
                    const std::vector<Eigen::VectorXd>& pts, double tol) {
  if (pts.empty()) return false;
  int n = static_cast<int>(p.size());
  int m = static_cast<int>(pts.size());
  // Feasibility of { sum l_i q_i = p (+-tol), sum l_i = 1 (+-tol), l >= 0 }.
  int rows = 2 * n + 2 + m;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, m);
  Eigen::VectorXd b(rows);
  for (int d = 0; d < n; ++d) {
    for (int i = 0; i < m; ++i) {
      A(2 * d, i) = pts[i](d);
      A(2 * d + 1, i) = -pts[i](d);
    }
    b(2 * d) = p(d) + tol;
    b(2 * d + 1) = -p(d) + tol;
  }
  for (int i = 0; i < m; ++i) {
    A(2 * n, i) = 1.0;
    A(2 * n + 1, i) = -1.0;
    A(2 * n + 2 + i, i) = -1.0;
    b(2 * n + 2 + i) = 0.0;
  }
  b(2 * n) = 1.0 + tol;
  b(2 * n + 1) = -1.0 + tol;
  return lp_solve(Eigen::VectorXd::Zero(m), A, b).status == LpResult::kOptimal;
}

}  // namespace valgeo

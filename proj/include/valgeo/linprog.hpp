#pragma once

#include <Eigen/Dense>

namespace valgeo {

struct LpResult {
  enum Status { kOptimal, kInfeasible, kUnbounded } status;
  Eigen::VectorXd x;
  double value = 0.0;
};

// Maximize c.x subject to A x <= b, x free. Dense two-phase simplex with
// Bland's rule; sized for the desk-scale systems of this project
// (a handful of variables, tens of rows).
LpResult lp_solve(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                  const Eigen::VectorXd& b);

// Is p contained in the convex hull of pts (each equality relaxed by tol)?
bool in_convex_hull(const Eigen::VectorXd& p,
                    const std::vector<Eigen::VectorXd>& pts, double tol = 1e-9);

}  // namespace valgeo

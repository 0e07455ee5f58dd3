#include "zonofit/solvers.hpp"

#include <cmath>

namespace zonofit {

ChebyshevBall chebyshevCenter(const std::vector<Halfspace>& halfspaces, Index dim,
                              const SolverConfig& config) {
  // Variables (x, r): maximize r s.t. <a_i, x> + r ||a_i|| <= b_i, r >= 0.
  LinearProgram lp = LinearProgram::withVariables(dim + 1);
  lp.direction = OptimizationDirection::Maximize;
  lp.objective(dim) = 1.0;
  for (Index j = 0; j < dim; ++j) lp.lower(j) = -LinearProgram::kInf;
  for (const Halfspace& h : halfspaces) {
    if (h.normal.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "halfspace dimension mismatch");
    Vector row(dim + 1);
    row.head(dim) = h.normal;
    row(dim) = h.normal.norm();
    lp.addConstraint(row, Sense::LessEqual, h.offset);
  }
  const LPSolution sol = solveLP(lp, config);
  if (sol.status == LPStatus::Infeasible)
    throw Error(ErrorCode::InfeasibleRegion, "Chebyshev region is empty");
  if (sol.status == LPStatus::Unbounded)
    throw Error(ErrorCode::UnboundedRegion, "Chebyshev region contains arbitrarily large balls");
  ChebyshevBall ball;
  ball.center = sol.x.head(dim);
  ball.radius = sol.x(dim);
  return ball;
}

ConeInterior coneInteriorPoint(const Matrix& A, double threshold,
                               const SolverConfig& config) {
  const Index k = A.rows();
  const Index N = A.cols();
  ConeInterior out;
  if (k == 0) {
    // No constraints: the cone is the whole space.
    out.interior = true;
    out.point = Vector::Zero(N);
    out.margin = 1.0;
    return out;
  }
  // Variables (x, t): maximize t s.t. A x - t 1 >= 0, -1 <= x <= 1.
  LinearProgram lp = LinearProgram::withVariables(N + 1);
  lp.direction = OptimizationDirection::Maximize;
  lp.objective(N) = 1.0;
  for (Index j = 0; j < N; ++j) {
    lp.lower(j) = -1.0;
    lp.upper(j) = 1.0;
  }
  lp.lower(N) = -LinearProgram::kInf;
  for (Index i = 0; i < k; ++i) {
    Vector row(N + 1);
    row.head(N) = A.row(i).transpose();
    row(N) = -1.0;
    lp.addConstraint(row, Sense::GreaterEqual, 0.0);
  }
  const LPSolution sol = solveLP(lp, config);
  if (sol.status != LPStatus::Optimal)
    throw Error(ErrorCode::LPNumericalFailure, "cone interior LP did not reach an optimum");
  out.point = sol.x.head(N);
  out.margin = sol.x(N);
  out.interior = out.margin > threshold;
  return out;
}

}  // namespace zonofit

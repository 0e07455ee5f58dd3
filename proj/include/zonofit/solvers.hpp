#ifndef ZONOFIT_SOLVERS_HPP_
#define ZONOFIT_SOLVERS_HPP_

#include "zonofit/common.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace zonofit {

class Zonotope;
class Polytope;

// ---------------------------------------------------------------------------
// Linear programming
// ---------------------------------------------------------------------------

enum class Sense { LessEqual, Equal, GreaterEqual };
enum class OptimizationDirection { Minimize, Maximize };

/// Dense LP: optimize <objective, x> subject to row-wise constraints and
/// per-variable bounds. Bounds default to x >= 0 when left empty.
struct LinearProgram {
  OptimizationDirection direction = OptimizationDirection::Minimize;
  Vector objective;
  Matrix constraints;
  std::vector<Sense> senses;
  Vector rhs;
  Vector lower;  // may hold -inf
  Vector upper;  // may hold +inf

  static constexpr double kInf = std::numeric_limits<double>::infinity();

  /// Empty LP over `vars` variables with x >= 0 bounds and zero objective.
  static LinearProgram withVariables(Index vars);
  void addConstraint(const Vector& row, Sense sense, double bound);
  Index variableCount() const { return objective.size(); }
  Index constraintCount() const { return constraints.rows(); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Vector x;
  double value = 0.0;
  /// Shadow prices d(value)/d(rhs_i) for each original constraint row.
  Vector duals;
  int iterations = 0;
};

/// Two-phase dense tableau simplex with Bland's rule. Throws
/// Error(IterationLimit) when the pivot budget runs out and
/// Error(LPNumericalFailure) when the recovered optimum violates the
/// constraints beyond tolerance.
LPSolution solveLP(const LinearProgram& lp,
                   const SolverConfig& config = defaultSolverConfig());

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

struct QPResult {
  Vector minimizer;
  double objective = 0.0;
  /// Per-variable state: -1 at lower bound, +1 at upper bound, 0 free.
  std::vector<int> activeSet;
  double kktResidual = 0.0;
  int iterations = 0;
};

/// min 0.5 * ||A x - b||^2 subject to 0 <= x <= 1 (primal active set,
/// minimum-norm steps on rank-deficient free sets, lowest-index release).
QPResult solveBoxLeastSquares(const Matrix& A, const Vector& b,
                              const SolverConfig& config = defaultSolverConfig());

/// min ||sum_i lambda_i y_i|| over the unit simplex, rows of `points` being
/// y_i (Wolfe's minimum-norm-point algorithm).
QPResult solveMinNormPoint(const Matrix& points,
                           const SolverConfig& config = defaultSolverConfig());

struct ZonotopeProjection {
  Vector lift;   // x in [0,1]^n
  Vector point;  // q = Q^T x + mu
  double distance = 0.0;
  double kktResidual = 0.0;
};

ZonotopeProjection projectPointToZonotope(
    const Zonotope& Z, const Vector& p,
    const SolverConfig& config = defaultSolverConfig());

struct PolytopeProjection {
  Vector weights;  // convex coefficients over the vertices
  Vector point;
  double distance = 0.0;
  double kktResidual = 0.0;
};

PolytopeProjection projectPointToPolytope(
    const Polytope& P, const Vector& p,
    const SolverConfig& config = defaultSolverConfig());

// ---------------------------------------------------------------------------
// Chebyshev centre and cone interior
// ---------------------------------------------------------------------------

/// Halfspace <normal, x> <= offset.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

struct ChebyshevBall {
  Vector center;
  double radius = 0.0;
};

/// Largest inscribed ball of {x : <a_i, x> <= b_i}. Throws
/// Error(InfeasibleRegion) or Error(UnboundedRegion).
ChebyshevBall chebyshevCenter(const std::vector<Halfspace>& halfspaces,
                              Index dim,
                              const SolverConfig& config = defaultSolverConfig());

struct ConeInterior {
  bool interior = false;
  Vector point;   // x with A x >= margin * 1, |x|_inf <= 1
  double margin = 0.0;  // optimal t*
};

inline constexpr double kConeInteriorThreshold = 1e-8;

/// max t s.t. A x >= t 1, -1 <= x <= 1. Interior iff t* > threshold.
ConeInterior coneInteriorPoint(const Matrix& A,
                               double threshold = kConeInteriorThreshold,
                               const SolverConfig& config = defaultSolverConfig());

}  // namespace zonofit

#endif  // ZONOFIT_SOLVERS_HPP_

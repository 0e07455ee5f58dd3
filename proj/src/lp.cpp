#include "zonofit/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zonofit {

LinearProgram LinearProgram::withVariables(Index vars) {
  LinearProgram lp;
  lp.objective = Vector::Zero(vars);
  lp.constraints = Matrix(0, vars);
  lp.rhs = Vector(0);
  lp.lower = Vector::Zero(vars);
  lp.upper = Vector::Constant(vars, kInf);
  return lp;
}

void LinearProgram::addConstraint(const Vector& row, Sense sense, double bound) {
  if (row.size() != variableCount())
    throw Error(ErrorCode::DimensionMismatch, "constraint row has wrong length");
  const Index m = constraints.rows();
  constraints.conservativeResize(m + 1, variableCount());
  constraints.row(m) = row.transpose();
  rhs.conservativeResize(m + 1);
  rhs(m) = bound;
  senses.push_back(sense);
}

namespace {

// x_j = offset + sum coef * y_col over standard-form columns.
struct VariableMap {
  double offset = 0.0;
  std::vector<std::pair<Index, double>> terms;
};

class Tableau {
 public:
  Tableau(Matrix body, std::vector<Index> basis)
      : t_(std::move(body)), basis_(std::move(basis)) {}

  Index rows() const { return t_.rows() - 1; }
  Index cols() const { return t_.cols() - 1; }
  double& at(Index r, Index c) { return t_(r, c); }
  double rhs(Index r) const { return t_(r, t_.cols() - 1); }
  double reducedCost(Index c) const { return t_(t_.rows() - 1, c); }
  double objectiveRhs() const { return t_(t_.rows() - 1, t_.cols() - 1); }
  const std::vector<Index>& basis() const { return basis_; }
  Matrix& raw() { return t_; }

  void pivot(Index r, Index c) {
    const double p = t_(r, c);
    t_.row(r) /= p;
    for (Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  /// Sets the objective row from a cost vector over the columns.
  void setObjective(const Vector& cost) {
    const Index m = rows();
    t_.row(m).setZero();
    t_.row(m).head(cost.size()) = cost.transpose();
    for (Index i = 0; i < m; ++i) {
      const double cb = cost(basis_[static_cast<std::size_t>(i)]);
      if (cb != 0.0) t_.row(m) -= cb * t_.row(i);
    }
  }

  void dropRows(const std::vector<bool>& drop) {
    Index keep = 0;
    for (bool d : drop) keep += d ? 0 : 1;
    Matrix next(keep + 1, t_.cols());
    std::vector<Index> nextBasis;
    Index r = 0;
    for (Index i = 0; i < rows(); ++i) {
      if (drop[static_cast<std::size_t>(i)]) continue;
      next.row(r++) = t_.row(i);
      nextBasis.push_back(basis_[static_cast<std::size_t>(i)]);
    }
    next.row(r) = t_.row(rows());
    t_ = std::move(next);
    basis_ = std::move(nextBasis);
  }

 private:
  Matrix t_;
  std::vector<Index> basis_;
};

enum class PhaseOutcome { Optimal, Unbounded };

// Bland's rule: lowest-index entering column with negative reduced cost,
// ratio-test ties broken by lowest basic index.
PhaseOutcome runSimplex(Tableau& tab, Index allowedCols, double costTol,
                        int& iterations, int maxIterations) {
  constexpr double kPivotTol = 1e-11;
  while (true) {
    Index enter = -1;
    for (Index c = 0; c < allowedCols; ++c) {
      if (tab.reducedCost(c) < -costTol) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return PhaseOutcome::Optimal;
    if (++iterations > maxIterations) {
      throw Error(ErrorCode::IterationLimit, "simplex iteration limit reached");
    }
    Index leave = -1;
    double best = 0.0;
    for (Index r = 0; r < tab.rows(); ++r) {
      const double a = tab.at(r, enter);
      if (a <= kPivotTol) continue;
      const double ratio = tab.rhs(r) / a;
      if (leave < 0 || ratio < best - 1e-12 * (1.0 + std::abs(best)) ||
          (std::abs(ratio - best) <= 1e-12 * (1.0 + std::abs(best)) &&
           tab.basis()[static_cast<std::size_t>(r)] <
               tab.basis()[static_cast<std::size_t>(leave)])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) return PhaseOutcome::Unbounded;
    tab.pivot(leave, enter);
  }
}

}  // namespace

LPSolution solveLP(const LinearProgram& lp, const SolverConfig& config) {
  const Index n = lp.variableCount();
  const Index m = lp.constraintCount();
  if (lp.constraints.cols() != n || lp.rhs.size() != m ||
      static_cast<Index>(lp.senses.size()) != m || lp.lower.size() != n ||
      lp.upper.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent linear program");
  }
  if (!lp.constraints.allFinite() || !lp.objective.allFinite() ||
      !lp.rhs.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "linear program has non-finite data");
  }

  // Variable substitution onto y >= 0.
  std::vector<VariableMap> vars(static_cast<std::size_t>(n));
  Index ycols = 0;
  struct BoundRow {
    Index col;
    double bound;
  };
  std::vector<BoundRow> boundRows;
  for (Index j = 0; j < n; ++j) {
    const double lo = lp.lower(j);
    const double hi = lp.upper(j);
    auto& vm = vars[static_cast<std::size_t>(j)];
    if (std::isfinite(lo)) {
      if (std::isfinite(hi) && hi < lo) {
        LPSolution infeasible;
        infeasible.status = LPStatus::Infeasible;
        return infeasible;
      }
      vm.offset = lo;
      vm.terms.push_back({ycols, 1.0});
      if (std::isfinite(hi)) boundRows.push_back({ycols, hi - lo});
      ++ycols;
    } else if (std::isfinite(hi)) {
      vm.offset = hi;
      vm.terms.push_back({ycols++, -1.0});
    } else {
      vm.terms.push_back({ycols++, 1.0});
      vm.terms.push_back({ycols++, -1.0});
    }
  }

  const Index rowsTotal = m + static_cast<Index>(boundRows.size());
  Index slackCount = 0;
  for (Sense s : lp.senses) slackCount += (s == Sense::Equal) ? 0 : 1;
  slackCount += static_cast<Index>(boundRows.size());
  const Index stdCols = ycols + slackCount;

  Matrix M = Matrix::Zero(rowsTotal, stdCols);
  Vector beta(rowsTotal);
  Vector cost = Vector::Zero(stdCols);
  std::vector<double> rowSign(static_cast<std::size_t>(rowsTotal), 1.0);
  std::vector<Index> slackOfRow(static_cast<std::size_t>(rowsTotal), -1);

  const double dirSign =
      lp.direction == OptimizationDirection::Maximize ? -1.0 : 1.0;
  for (Index j = 0; j < n; ++j) {
    for (const auto& [col, coef] : vars[static_cast<std::size_t>(j)].terms)
      cost(col) += dirSign * lp.objective(j) * coef;
  }

  Index slack = ycols;
  for (Index i = 0; i < m; ++i) {
    double b = lp.rhs(i);
    for (Index j = 0; j < n; ++j) {
      const double a = lp.constraints(i, j);
      if (a == 0.0) continue;
      const auto& vm = vars[static_cast<std::size_t>(j)];
      b -= a * vm.offset;
      for (const auto& [col, coef] : vm.terms) M(i, col) += a * coef;
    }
    const Sense s = lp.senses[static_cast<std::size_t>(i)];
    if (s == Sense::LessEqual) {
      M(i, slack) = 1.0;
      slackOfRow[static_cast<std::size_t>(i)] = slack++;
    } else if (s == Sense::GreaterEqual) {
      M(i, slack) = -1.0;
      slackOfRow[static_cast<std::size_t>(i)] = slack++;
    }
    beta(i) = b;
  }
  for (std::size_t k = 0; k < boundRows.size(); ++k) {
    const Index i = m + static_cast<Index>(k);
    M(i, boundRows[k].col) = 1.0;
    M(i, slack) = 1.0;
    slackOfRow[static_cast<std::size_t>(i)] = slack++;
    beta(i) = boundRows[k].bound;
  }
  for (Index i = 0; i < rowsTotal; ++i) {
    if (beta(i) < 0.0) {
      M.row(i) *= -1.0;
      beta(i) = -beta(i);
      rowSign[static_cast<std::size_t>(i)] = -1.0;
    }
  }

  // Phase 1 basis: a +1 slack where available, artificial otherwise.
  std::vector<Index> basis(static_cast<std::size_t>(rowsTotal), -1);
  std::vector<Index> artificialRows;
  for (Index i = 0; i < rowsTotal; ++i) {
    const Index s = slackOfRow[static_cast<std::size_t>(i)];
    if (s >= 0 && M(i, s) > 0.0) {
      basis[static_cast<std::size_t>(i)] = s;
    } else {
      artificialRows.push_back(i);
    }
  }
  const Index artCount = static_cast<Index>(artificialRows.size());
  const Index totalCols = stdCols + artCount;
  Matrix body = Matrix::Zero(rowsTotal + 1, totalCols + 1);
  body.topLeftCorner(rowsTotal, stdCols) = M;
  body.col(totalCols).head(rowsTotal) = beta;
  for (Index k = 0; k < artCount; ++k) {
    const Index i = artificialRows[static_cast<std::size_t>(k)];
    body(i, stdCols + k) = 1.0;
    basis[static_cast<std::size_t>(i)] = stdCols + k;
  }
  Tableau tab(std::move(body), basis);

  const int maxIterations =
      std::max<int>(config.minIterations,
                    config.iterationFactor * static_cast<int>(totalCols + rowsTotal));
  int iterations = 0;
  const double bnorm = beta.size() ? beta.lpNorm<Eigen::Infinity>() : 0.0;

  if (artCount > 0) {
    Vector phase1 = Vector::Zero(totalCols);
    phase1.tail(artCount).setOnes();
    tab.setObjective(phase1);
    runSimplex(tab, totalCols, 1e-12, iterations, maxIterations);
    if (-tab.objectiveRhs() > config.feasibilityTol * (1.0 + bnorm)) {
      LPSolution infeasible;
      infeasible.status = LPStatus::Infeasible;
      infeasible.iterations = iterations;
      return infeasible;
    }
    // Drive remaining zero-level artificials out of the basis.
    std::vector<bool> drop(static_cast<std::size_t>(tab.rows()), false);
    bool anyDrop = false;
    for (Index r = 0; r < tab.rows(); ++r) {
      if (tab.basis()[static_cast<std::size_t>(r)] < stdCols) continue;
      Index col = -1;
      double bestAbs = 1e-9;
      for (Index c = 0; c < stdCols; ++c) {
        if (std::abs(tab.at(r, c)) > bestAbs) {
          bestAbs = std::abs(tab.at(r, c));
          col = c;
        }
      }
      if (col >= 0) {
        tab.pivot(r, col);
      } else {
        drop[static_cast<std::size_t>(r)] = true;
        anyDrop = true;
      }
    }
    if (anyDrop) tab.dropRows(drop);
  }

  Vector phase2 = Vector::Zero(totalCols);
  phase2.head(stdCols) = cost;
  tab.setObjective(phase2);
  const double costScale = 1.0 + (cost.size() ? cost.lpNorm<Eigen::Infinity>() : 0.0);
  const PhaseOutcome outcome =
      runSimplex(tab, stdCols, 1e-11 * costScale, iterations, maxIterations);
  if (outcome == PhaseOutcome::Unbounded) {
    LPSolution unbounded;
    unbounded.status = LPStatus::Unbounded;
    unbounded.iterations = iterations;
    return unbounded;
  }

  // Recover the basic solution from the original columns for accuracy.
  const auto& finalBasis = tab.basis();
  const Index kept = static_cast<Index>(finalBasis.size());
  Vector y = Vector::Zero(stdCols);
  Vector stdDuals = Vector::Zero(rowsTotal);
  {
    // Dropped rows are combinations of the kept ones, so a least-squares
    // solve over all rows of M recovers the same basic solution.
    Matrix B(rowsTotal, kept);
    Vector cB(kept);
    for (Index k = 0; k < kept; ++k) {
      B.col(k) = M.col(finalBasis[static_cast<std::size_t>(k)]);
      cB(k) = cost(finalBasis[static_cast<std::size_t>(k)]);
    }
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(B);
    const Vector yB = cod.solve(beta);
    for (Index k = 0; k < kept; ++k) y(finalBasis[static_cast<std::size_t>(k)]) = yB(k);
    Eigen::CompleteOrthogonalDecomposition<Matrix> codT(B.transpose());
    stdDuals = codT.solve(cB);
  }
  // Tableau values are the fallback if refinement produced negative noise.
  for (Index r = 0; r < tab.rows(); ++r) {
    const Index c = finalBasis[static_cast<std::size_t>(r)];
    if (y(c) < 0.0) y(c) = std::max(0.0, tab.rhs(r));
  }

  LPSolution sol;
  sol.status = LPStatus::Optimal;
  sol.iterations = iterations;
  sol.x = Vector(n);
  for (Index j = 0; j < n; ++j) {
    const auto& vm = vars[static_cast<std::size_t>(j)];
    double v = vm.offset;
    for (const auto& [col, coef] : vm.terms) v += coef * y(col);
    sol.x(j) = v;
  }
  sol.value = lp.objective.dot(sol.x);
  sol.duals = Vector(m);
  for (Index i = 0; i < m; ++i)
    sol.duals(i) = dirSign * rowSign[static_cast<std::size_t>(i)] * stdDuals(i);

  // Primal feasibility check on the original problem.
  const double origBnorm = m ? lp.rhs.lpNorm<Eigen::Infinity>() : 0.0;
  const double tol = config.feasibilityTol * (1.0 + origBnorm) *
                     (1.0 + (m ? lp.constraints.lpNorm<Eigen::Infinity>() : 0.0));
  double worst = 0.0;
  for (Index i = 0; i < m; ++i) {
    const double ax = lp.constraints.row(i).dot(sol.x);
    const double r = ax - lp.rhs(i);
    switch (lp.senses[static_cast<std::size_t>(i)]) {
      case Sense::LessEqual: worst = std::max(worst, r); break;
      case Sense::GreaterEqual: worst = std::max(worst, -r); break;
      case Sense::Equal: worst = std::max(worst, std::abs(r)); break;
    }
  }
  for (Index j = 0; j < n; ++j) {
    if (std::isfinite(lp.lower(j))) worst = std::max(worst, lp.lower(j) - sol.x(j));
    if (std::isfinite(lp.upper(j))) worst = std::max(worst, sol.x(j) - lp.upper(j));
  }
  if (worst > tol) {
    std::ostringstream os;
    os << "LP solution violates constraints by " << worst;
    throw Error(ErrorCode::LPNumericalFailure, os.str());
  }
  return sol;
}

}  // namespace zonofit

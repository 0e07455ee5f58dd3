#ifndef ZONOFIT_DESCENT_HPP_
#define ZONOFIT_DESCENT_HPP_

#include "zonofit/cone.hpp"

#include <random>
#include <string>
#include <vector>

namespace zonofit {

enum class StepRule { Conservative, Random, Aggressive, Hybrid };

const char* stepRuleName(StepRule rule) noexcept;
/// Parses "conservative", "random", "aggressive" or "hybrid"; throws InvalidArgument.
StepRule parseStepRule(const std::string& name);

enum class Termination { Threshold, MaxSteps, CertifiedOrFeasibleEmpty, SolverFailure };

const char* terminationName(Termination t) noexcept;

using Rng = std::mt19937_64;

struct DescentConfig {
  Index rank = 0;
  int maxSteps = 200;
  double threshold = 1e-9;
  StepRule stepRule = StepRule::Conservative;
  /// Iteration at which Hybrid turns conservative; negative means maxSteps / 3.
  int switchAt = -1;
  std::uint64_t rngSeed = 0;
  /// Perturbation half-width relative to the longest generator.
  double perturbScale = 1e-6;
  int maxPerturbTries = 50;
  Objective objective = Objective::Exact;
  double tolActive = kTolActive;
  bool coneFallback = false;
  /// Conservative steps are halved until the objective strictly drops
  /// (at most maxBacktracks times). Off means the plain tau / 2 step.
  bool conservativeBacktrack = true;
  int maxBacktracks = 40;
  /// Off leaves the per-iteration wall time at zero so traces compare bitwise.
  bool recordTiming = true;
};

struct TraceRecord {
  int iter = 0;
  double dExact = 0.0;
  double dCoarse = 0.0;
  double step = 0.0;
  std::string rule;
  int activePairs = 0;
  std::string coneStatus;
  double ms = 0.0;
  /// Objective after the step (not part of the CSV).
  double dAfter = 0.0;
};

struct DescentTrace {
  std::vector<TraceRecord> records;
  Termination termination = Termination::MaxSteps;
  Certificate certificate = Certificate::None;
  std::string message;
  double finalExact = 0.0;
  double finalCoarse = 0.0;
};

struct OptimizeResult {
  Zonotope zonotope;
  DescentTrace trace;
};

/// Subgradient loop guided by the feasibility cone. Deterministic for a
/// fixed configuration and seed.
OptimizeResult optimize(const Polytope& P, const Zonotope& Z0, const DescentConfig& cfg);

/// Half of the min / a random / the max tau; Hybrid is aggressive before
/// switchAt and conservative afterwards. Throws EmptyTaus.
double chooseStep(StepRule rule, const std::vector<double>& taus, Rng& rng, int iter = 0,
                  int switchAt = 0);

/// Effective rule for an iteration (Hybrid resolved).
StepRule effectiveRule(StepRule rule, int iter, int switchAt);

/// Random entrywise perturbations until the locality conditions hold.
/// Throws PerturbationBudgetExceeded after maxTries.
Zonotope perturbUntilLocal(const Polytope& P, const Zonotope& Z, double sigma, Rng& rng,
                           int maxTries = 50, Objective objective = Objective::Exact);

/// Objective value at Z.
double objectiveValue(const Polytope& P, const Zonotope& Z, Objective objective);

}  // namespace zonofit

#endif  // ZONOFIT_DESCENT_HPP_

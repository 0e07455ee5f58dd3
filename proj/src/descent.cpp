#include "zonofit/descent.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace zonofit {

const char* stepRuleName(StepRule rule) noexcept {
  switch (rule) {
    case StepRule::Conservative: return "conservative";
    case StepRule::Random: return "random";
    case StepRule::Aggressive: return "aggressive";
    case StepRule::Hybrid: return "hybrid";
  }
  return "unknown";
}

StepRule parseStepRule(const std::string& name) {
  for (StepRule r : {StepRule::Conservative, StepRule::Random, StepRule::Aggressive, StepRule::Hybrid})
    if (name == stepRuleName(r)) return r;
  throw Error(ErrorCode::InvalidArgument, "unknown step rule '" + name + "'");
}

const char* terminationName(Termination t) noexcept {
  switch (t) {
    case Termination::Threshold: return "Threshold";
    case Termination::MaxSteps: return "MaxSteps";
    case Termination::CertifiedOrFeasibleEmpty: return "CertifiedOrFeasibleEmpty";
    case Termination::SolverFailure: return "SolverFailure";
  }
  return "Unknown";
}

StepRule effectiveRule(StepRule rule, int iter, int switchAt) {
  if (rule != StepRule::Hybrid) return rule;
  return iter < switchAt ? StepRule::Aggressive : StepRule::Conservative;
}

double chooseStep(StepRule rule, const std::vector<double>& taus, Rng& rng, int iter, int switchAt) {
  if (taus.empty()) throw Error(ErrorCode::EmptyTaus, "no step limits to choose from");
  switch (effectiveRule(rule, iter, switchAt)) {
    case StepRule::Conservative: return 0.5 * *std::min_element(taus.begin(), taus.end());
    case StepRule::Aggressive: return 0.5 * *std::max_element(taus.begin(), taus.end());
    case StepRule::Random: {
      std::uniform_int_distribution<std::size_t> pick(0, taus.size() - 1);
      return 0.5 * taus[pick(rng)];
    }
    case StepRule::Hybrid: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unresolved step rule");
}

double objectiveValue(const Polytope& P, const Zonotope& Z, Objective objective) {
  return objective == Objective::Exact ? hausdorffDistance(P, Z).value : coarseHausdorffDistance(P, Z).value;
}

namespace {

double longestGenerator(const Zonotope& Z) {
  const double g = Z.generators().rowwise().norm().maxCoeff();
  return g > 0.0 ? g : 1.0;
}

Zonotope jitter(const Zonotope& Z, double sigma, Rng& rng) {
  std::uniform_real_distribution<double> U(-sigma, sigma);
  ParamVector x = toParams(Z);
  for (Index k = 0; k < x.size(); ++k) x(k) += U(rng);
  return fromParams(x, Z.rank(), Z.dim());
}

bool isLocal(const Polytope& P, const ZonotopeGeometry& G, Objective objective) {
  if (objective == Objective::Coarse) return isGeneralPosition(G.zonotope);
  return checkLocality(P, G).ok();
}

struct Evaluated {
  explicit Evaluated(const Zonotope& Z) : geometry(Z) {}
  ZonotopeGeometry geometry;
  double exact = 0.0;
  double coarse = 0.0;
};

Evaluated evaluate(const Polytope& P, const Zonotope& Z) {
  Evaluated e(Z);
  e.exact = hausdorffDistance(P, e.geometry).value;
  e.coarse = coarseHausdorffDistance(P, e.geometry).value;
  return e;
}

}  // namespace

Zonotope perturbUntilLocal(const Polytope& P, const Zonotope& Z, double sigma, Rng& rng, int maxTries,
                           Objective objective) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "perturbation scale must be positive");
  if (isLocal(P, ZonotopeGeometry(Z), objective)) return Z;
  Zonotope cur = Z;
  for (int t = 0; t < maxTries; ++t) {
    cur = jitter(cur, sigma, rng);
    if (isLocal(P, ZonotopeGeometry(cur), objective)) return cur;
  }
  throw Error(ErrorCode::PerturbationBudgetExceeded,
              "locality conditions still fail after " + std::to_string(maxTries) + " perturbations");
}

OptimizeResult optimize(const Polytope& P, const Zonotope& Z0, const DescentConfig& cfg) {
  if (cfg.rank > 0 && Z0.rank() != cfg.rank)
    throw Error(ErrorCode::DimensionMismatch, "initial zonotope rank differs from the configured rank");
  if (P.dim() != Z0.dim()) throw Error(ErrorCode::DimensionMismatch, "polytope and zonotope dimensions differ");
  if (cfg.maxSteps < 1 || cfg.threshold < 0.0 || !(cfg.perturbScale > 0.0))
    throw Error(ErrorCode::InvalidArgument, "invalid descent configuration");
  const Index n = Z0.rank();
  const Index d = Z0.dim();
  const int switchAt = cfg.switchAt < 0 ? cfg.maxSteps / 3 : cfg.switchAt;
  Rng rng(cfg.rngSeed);
  using Clock = std::chrono::steady_clock;

  Zonotope Z = canonicalize(Z0);
  Evaluated cur = evaluate(P, Z);
  DescentTrace trace;
  int iter = 0;
  bool retried = false;
  while (true) {
    const double value = cfg.objective == Objective::Exact ? cur.exact : cur.coarse;
    if (value <= cfg.threshold) {
      trace.termination = Termination::Threshold;
      break;
    }
    if (iter >= cfg.maxSteps) {
      trace.termination = Termination::MaxSteps;
      break;
    }
    const auto t0 = Clock::now();
    const double sigma = cfg.perturbScale * longestGenerator(Z);
    DirectionResult dir;
    SubdifferentialSet sub;
    try {
      if (!isLocal(P, cur.geometry, cfg.objective)) {
        Z = perturbUntilLocal(P, Z, sigma, rng, cfg.maxPerturbTries, cfg.objective);
        cur = evaluate(P, Z);
      }
      sub = clarkeSubdifferential(P, cur.geometry, cfg.tolActive, cfg.objective);
      const FeasibilityCone cone = buildCone(sub.activePairs, n, d);
      dir = descentDirection(sub, cone, {cfg.objective, cfg.coneFallback, kConeInteriorThreshold});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PerturbationBudgetExceeded) throw;
      if (!retried) {
        retried = true;
        Z = jitter(Z, sigma, rng);
        cur = evaluate(P, Z);
        continue;
      }
      trace.termination = Termination::SolverFailure;
      trace.message = std::string(errorCodeName(e.code())) + ": " + e.what();
      break;
    }
    retried = false;

    TraceRecord rec;
    rec.iter = iter;
    rec.dExact = cur.exact;
    rec.dCoarse = cur.coarse;
    rec.activePairs = static_cast<int>(sub.activePairs.size());
    rec.coneStatus = directionStatusName(dir.status);
    const StepRule rule = effectiveRule(cfg.stepRule, iter, switchAt);
    rec.rule = stepRuleName(rule);
    if (dir.status != DirectionStatus::Descent) {
      rec.dAfter = cfg.objective == Objective::Exact ? cur.exact : cur.coarse;
      if (cfg.recordTiming) rec.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      trace.records.push_back(rec);
      trace.termination = Termination::CertifiedOrFeasibleEmpty;
      trace.certificate = dir.certificate;
      break;
    }
    double h = chooseStep(rule, dir.taus, rng, iter, switchAt);
    const ParamVector x = toParams(Z);
    Zonotope next = canonicalize(fromParams(x + h * dir.direction, n, d));
    Evaluated after = evaluate(P, next);
    if (rule == StepRule::Conservative && cfg.conservativeBacktrack) {
      // tau only bounds the active pairs; an inactive vertex may overtake them
      auto objectiveOf = [&](const Evaluated& e) { return cfg.objective == Objective::Exact ? e.exact : e.coarse; };
      for (int b = 0; b < cfg.maxBacktracks && !(objectiveOf(after) < value); ++b) {
        h *= 0.5;
        next = canonicalize(fromParams(x + h * dir.direction, n, d));
        after = evaluate(P, next);
      }
    }
    Z = next;
    cur = std::move(after);
    rec.step = h;
    rec.dAfter = cfg.objective == Objective::Exact ? cur.exact : cur.coarse;
    if (cfg.recordTiming) rec.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    trace.records.push_back(rec);
    ++iter;
  }
  trace.finalExact = cur.exact;
  trace.finalCoarse = cur.coarse;
  return {Z, std::move(trace)};
}

}  // namespace zonofit

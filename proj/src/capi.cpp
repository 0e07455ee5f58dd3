#include "zonofit/zonofit.h"

#include "zonofit/io.hpp"
#include "zonofit/warmstart.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct zf_polytope {
  zonofit::Polytope value;
};

struct zf_zonotope {
  zonofit::Zonotope value;
};

struct zf_run {
  zonofit::OptimizeResult result;
  zonofit::Objective objective;
};

namespace {

using namespace zonofit;
using nlohmann::json;

thread_local std::string lastError;

zf_status statusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::EmptyTaus:
      return ZF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
      return ZF_ERR_PARSE;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DegenerateInput:
    case ErrorCode::RankCapExceeded:
    case ErrorCode::DimensionNot2:
    case ErrorCode::AsymmetryTooLarge:
      return ZF_ERR_INVALID_INPUT;
    case ErrorCode::PerturbationBudgetExceeded:
      return ZF_ERR_PERTURBATION_BUDGET;
    case ErrorCode::LocalityViolation:
      return ZF_ERR_LOCALITY;
    default:
      return ZF_ERR_SOLVER;
  }
}

template <typename Fn>
zf_status guarded(Fn&& fn) {
  try {
    lastError.clear();
    return fn();
  } catch (const Error& e) {
    lastError = std::string(errorCodeName(e.code())) + ": " + e.what();
    return statusOf(e.code());
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return ZF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    lastError = e.what();
    return ZF_ERR_INTERNAL;
  }
}

zf_status invalid(const char* what) {
  lastError = what;
  return ZF_ERR_INVALID_ARGUMENT;
}

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json toJson(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json localityJson(const LocalityReport& rep) {
  return {{"ok", rep.ok()},
          {"general_position", rep.generalPosition},
          {"unstable_lifts", rep.stableVertices},
          {"unstable_p_vertices", rep.hausdorffStableP},
          {"unstable_z_vertices", rep.hausdorffStableZ}};
}

DescentConfig configFrom(const zf_options& o) {
  DescentConfig cfg;
  cfg.rank = o.rank;
  cfg.maxSteps = o.max_steps;
  cfg.threshold = o.threshold;
  switch (o.rule) {
    case ZF_RULE_CONSERVATIVE: cfg.stepRule = StepRule::Conservative; break;
    case ZF_RULE_RANDOM: cfg.stepRule = StepRule::Random; break;
    case ZF_RULE_AGGRESSIVE: cfg.stepRule = StepRule::Aggressive; break;
    case ZF_RULE_HYBRID: cfg.stepRule = StepRule::Hybrid; break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown step rule");
  }
  cfg.switchAt = o.switch_at;
  cfg.rngSeed = o.seed;
  cfg.perturbScale = o.perturb_scale;
  cfg.maxPerturbTries = o.max_perturb_tries;
  if (o.objective != ZF_OBJECTIVE_EXACT && o.objective != ZF_OBJECTIVE_COARSE)
    throw Error(ErrorCode::InvalidArgument, "unknown objective");
  cfg.objective = o.objective == ZF_OBJECTIVE_COARSE ? Objective::Coarse : Objective::Exact;
  cfg.tolActive = o.tol_active;
  cfg.coneFallback = o.cone_fallback != 0;
  cfg.conservativeBacktrack = o.backtrack != 0;
  cfg.maxBacktracks = o.max_backtracks;
  cfg.recordTiming = o.record_timing != 0;
  if (cfg.maxPerturbTries < 0 || cfg.maxBacktracks < 0 || !(cfg.tolActive >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "invalid descent configuration");
  return cfg;
}

}  // namespace

extern "C" {

const char* zf_version(void) { return "0.1.0"; }

const char* zf_status_string(zf_status status) {
  switch (status) {
    case ZF_OK: return "ok";
    case ZF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ZF_ERR_PARSE: return "parse error";
    case ZF_ERR_INVALID_INPUT: return "invalid input";
    case ZF_ERR_SOLVER: return "solver failure";
    case ZF_ERR_PERTURBATION_BUDGET: return "perturbation budget exceeded";
    case ZF_ERR_LOCALITY: return "locality violation";
    case ZF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* zf_last_error(void) { return lastError.c_str(); }

void zf_string_free(char* s) { std::free(s); }

zf_status zf_polytope_from_json(const char* text, zf_polytope** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new zf_polytope{polytopeFromJson(text)};
    return ZF_OK;
  });
}

zf_status zf_polytope_to_json(const zf_polytope* p, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = dupString(polytopeToJson(p->value));
    return ZF_OK;
  });
}

int zf_polytope_dim(const zf_polytope* p) { return p ? static_cast<int>(p->value.dim()) : 0; }

int zf_polytope_vertex_count(const zf_polytope* p) { return p ? static_cast<int>(p->value.vertexCount()) : 0; }

void zf_polytope_free(zf_polytope* p) { delete p; }

zf_status zf_zonotope_from_json(const char* text, zf_zonotope** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new zf_zonotope{zonotopeFromJson(text)};
    return ZF_OK;
  });
}

zf_status zf_zonotope_to_json(const zf_zonotope* z, char** out) {
  if (!z || !out) return invalid("null argument");
  return guarded([&] {
    *out = dupString(zonotopeToJson(canonicalize(z->value)));
    return ZF_OK;
  });
}

int zf_zonotope_rank(const zf_zonotope* z) { return z ? static_cast<int>(z->value.rank()) : 0; }

int zf_zonotope_dim(const zf_zonotope* z) { return z ? static_cast<int>(z->value.dim()) : 0; }

zf_status zf_zonotope_as_polytope(const zf_zonotope* z, zf_polytope** out) {
  if (!z || !out) return invalid("null argument");
  return guarded([&] {
    *out = new zf_polytope{asPolytope(z->value)};
    return ZF_OK;
  });
}

void zf_zonotope_free(zf_zonotope* z) { delete z; }

zf_status zf_distance(const zf_polytope* p, const zf_zonotope* z, int coarse, double* value, char** report) {
  if (!p || !z || !value) return invalid("null argument");
  return guarded([&] {
    if (p->value.dim() != z->value.dim()) throw Error(ErrorCode::DimensionMismatch, "dimensions differ");
    const DistanceResult r =
        coarse ? coarseHausdorffDistance(p->value, z->value) : hausdorffDistance(p->value, z->value);
    *value = r.value;
    if (report) *report = dupString(distanceReportJson(r, coarse != 0));
    return ZF_OK;
  });
}

zf_status zf_locality_report(const zf_polytope* p, const zf_zonotope* z, int* ok, char** report) {
  if (!p || !z) return invalid("null argument");
  return guarded([&] {
    if (p->value.dim() != z->value.dim()) throw Error(ErrorCode::DimensionMismatch, "dimensions differ");
    const LocalityReport rep = checkLocality(p->value, z->value);
    if (ok) *ok = rep.ok() ? 1 : 0;
    if (report) *report = dupString(localityJson(rep).dump(2));
    return ZF_OK;
  });
}

zf_status zf_cone_report(const zf_polytope* p, const zf_zonotope* z, zf_objective objective, char** report) {
  if (!p || !z || !report) return invalid("null argument");
  return guarded([&] {
    if (p->value.dim() != z->value.dim()) throw Error(ErrorCode::DimensionMismatch, "dimensions differ");
    const Objective obj = objective == ZF_OBJECTIVE_COARSE ? Objective::Coarse : Objective::Exact;
    const Zonotope Z = canonicalize(z->value);
    const ZonotopeGeometry G(Z);
    const LocalityReport rep = checkLocality(p->value, G);
    const bool local = obj == Objective::Coarse ? rep.generalPosition : rep.ok();
    if (!local) {
      json j = {{"objective", objectiveName(obj)}, {"locality", localityJson(rep)}};
      *report = dupString(j.dump(2));
      lastError = "LocalityViolation: locality conditions fail at the given zonotope";
      return ZF_ERR_LOCALITY;
    }
    const SubdifferentialSet sub = clarkeSubdifferential(p->value, G, kTolActive, obj);
    const FeasibilityCone cone = buildCone(sub.activePairs, Z.rank(), Z.dim());
    const ConeInterior ci = coneInteriorPoint(cone.rows);
    json A = json::array();
    for (Index r = 0; r < cone.rows.rows(); ++r) A.push_back(toJson(cone.rows.row(r).transpose()));
    json j = {{"objective", objectiveName(obj)},
              {"value", sub.value},
              {"layout", "g_11..g_1d, ..., g_n1..g_nd, mu_1..mu_d"},
              {"A", A},
              {"interior", ci.interior},
              {"t_star", ci.margin},
              {"locality", localityJson(rep)}};
    if (sub.gradients.empty()) {
      j["direction_status"] = "None";
      j["certificate"] = "None";
      j["verdict"] = "distance is zero";
    } else {
      const DirectionResult dir = descentDirection(sub, cone, {obj, false, kConeInteriorThreshold});
      j["direction_status"] = directionStatusName(dir.status);
      j["certificate"] = certificateName(dir.certificate);
      if (dir.status == DirectionStatus::Descent) {
        j["direction"] = toJson(dir.direction);
        j["taus"] = dir.taus;
      }
      j["verdict"] = ci.interior ? "not a local minimum" : "cone has empty interior";
    }
    *report = dupString(j.dump(2));
    return ZF_OK;
  });
}

zf_status zf_warmstart(const zf_polytope* p, int rank, zf_start start, uint64_t seed, zf_zonotope** out) {
  if (!p || !out) return invalid("null argument");
  if (start != ZF_START_AUTO && start != ZF_START_RANDOM) return invalid("unknown start mode");
  return guarded([&] {
    Rng rng(seed);
    const Index n = rank;
    *out = new zf_zonotope{start == ZF_START_AUTO ? warmstart(p->value, n, rng) : randomStart(p->value, n, rng)};
    return ZF_OK;
  });
}

void zf_options_default(zf_options* o) {
  if (!o) return;
  const DescentConfig cfg;
  o->rank = 0;
  o->max_steps = cfg.maxSteps;
  o->threshold = cfg.threshold;
  o->rule = ZF_RULE_CONSERVATIVE;
  o->switch_at = cfg.switchAt;
  o->seed = cfg.rngSeed;
  o->perturb_scale = cfg.perturbScale;
  o->max_perturb_tries = cfg.maxPerturbTries;
  o->objective = ZF_OBJECTIVE_EXACT;
  o->tol_active = cfg.tolActive;
  o->cone_fallback = cfg.coneFallback ? 1 : 0;
  o->backtrack = cfg.conservativeBacktrack ? 1 : 0;
  o->max_backtracks = cfg.maxBacktracks;
  o->record_timing = cfg.recordTiming ? 1 : 0;
}

zf_status zf_optimize(const zf_polytope* p, const zf_zonotope* start, const zf_options* options, zf_run** out) {
  if (!p || !start || !out) return invalid("null argument");
  return guarded([&] {
    zf_options o;
    zf_options_default(&o);
    if (options) o = *options;
    DescentConfig cfg = configFrom(o);
    if (cfg.rank == 0) cfg.rank = start->value.rank();
    *out = new zf_run{optimize(p->value, start->value, cfg), cfg.objective};
    return ZF_OK;
  });
}

zf_status zf_run_zonotope(const zf_run* run, zf_zonotope** out) {
  if (!run || !out) return invalid("null argument");
  return guarded([&] {
    *out = new zf_zonotope{run->result.zonotope};
    return ZF_OK;
  });
}

zf_status zf_run_trace_csv(const zf_run* run, char** out) {
  if (!run || !out) return invalid("null argument");
  return guarded([&] {
    *out = dupString(traceToCsv(run->result.trace));
    return ZF_OK;
  });
}

zf_status zf_run_summary_json(const zf_run* run, char** out) {
  if (!run || !out) return invalid("null argument");
  return guarded([&] {
    const DescentTrace& t = run->result.trace;
    json j = {{"termination", terminationName(t.termination)},
              {"certificate", certificateName(t.certificate)},
              {"message", t.message},
              {"objective", objectiveName(run->objective)},
              {"final_exact", t.finalExact},
              {"final_coarse", t.finalCoarse},
              {"iterations", t.records.size()}};
    *out = dupString(j.dump(2));
    return ZF_OK;
  });
}

size_t zf_run_iterations(const zf_run* run) { return run ? run->result.trace.records.size() : 0; }

zf_status zf_run_objective_curve(const zf_run* run, double* values, size_t capacity, size_t* count) {
  if (!run || !count || (capacity > 0 && !values)) return invalid("null argument");
  const DescentTrace& t = run->result.trace;
  const bool exact = run->objective == Objective::Exact;
  *count = t.records.size() + 1;
  for (size_t k = 0; k < t.records.size() && k < capacity; ++k)
    values[k] = exact ? t.records[k].dExact : t.records[k].dCoarse;
  if (t.records.size() < capacity) values[t.records.size()] = exact ? t.finalExact : t.finalCoarse;
  lastError.clear();
  return ZF_OK;
}

void zf_run_free(zf_run* run) { delete run; }

zf_status zf_render_svg(const zf_polytope* p, const zf_zonotope* z, char** out) {
  if (!p || !z || !out) return invalid("null argument");
  return guarded([&] {
    const DistanceResult r = hausdorffDistance(p->value, z->value);
    *out = dupString(renderSvg(p->value, z->value, r.pairs));
    return ZF_OK;
  });
}

zf_status zf_random_polytope(int dim, int count, uint64_t seed, zf_polytope** out) {
  if (!out) return invalid("null argument");
  if (dim < 1 || count <= dim) return invalid("need dim >= 1 and more points than the dimension");
  return guarded([&] {
    Rng rng(seed);
    *out = new zf_polytope{randomPolytope(rng, dim, count)};
    return ZF_OK;
  });
}

zf_status zf_random_zonotope(int rank, int dim, uint64_t seed, zf_zonotope** out) {
  if (!out) return invalid("null argument");
  if (dim < 1 || rank < dim) return invalid("need rank >= dim >= 1");
  return guarded([&] {
    Rng rng(seed);
    *out = new zf_zonotope{randomZonotope(rng, rank, dim)};
    return ZF_OK;
  });
}

}  // extern "C"

// Command-line front end. Uses the C interface only.
#include "zonofit/zonofit.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSolver = 3, kBudget = 4, kLocality = 5 };

struct Failure : std::runtime_error {
  int code;
  Failure(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

int exitFor(zf_status s) {
  switch (s) {
    case ZF_OK: return kOk;
    case ZF_ERR_INVALID_ARGUMENT: return kUsage;
    case ZF_ERR_PARSE:
    case ZF_ERR_INVALID_INPUT: return kParse;
    case ZF_ERR_PERTURBATION_BUDGET: return kBudget;
    case ZF_ERR_LOCALITY: return kLocality;
    default: return kSolver;
  }
}

void check(zf_status s, const std::string& context) {
  if (s != ZF_OK) throw Failure(exitFor(s), context + ": " + zf_status_string(s) + " (" + zf_last_error() + ")");
}

struct PolytopeDeleter {
  void operator()(zf_polytope* p) const { zf_polytope_free(p); }
};
struct ZonotopeDeleter {
  void operator()(zf_zonotope* z) const { zf_zonotope_free(z); }
};
struct RunDeleter {
  void operator()(zf_run* r) const { zf_run_free(r); }
};
using PolytopePtr = std::unique_ptr<zf_polytope, PolytopeDeleter>;
using ZonotopePtr = std::unique_ptr<zf_zonotope, ZonotopeDeleter>;
using RunPtr = std::unique_ptr<zf_run, RunDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  zf_string_free(s);
  return out;
}

std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kParse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure(kParse, "cannot write " + path);
}

PolytopePtr loadPolytope(const std::string& path) {
  zf_polytope* p = nullptr;
  check(zf_polytope_from_json(readText(path).c_str(), &p), path);
  return PolytopePtr(p);
}

ZonotopePtr loadZonotope(const std::string& path) {
  zf_zonotope* z = nullptr;
  check(zf_zonotope_from_json(readText(path).c_str(), &z), path);
  return ZonotopePtr(z);
}

const char* ruleName(zf_step_rule r) {
  switch (r) {
    case ZF_RULE_CONSERVATIVE: return "conservative";
    case ZF_RULE_RANDOM: return "random";
    case ZF_RULE_AGGRESSIVE: return "aggressive";
    case ZF_RULE_HYBRID: return "hybrid";
  }
  return "conservative";
}

zf_step_rule parseRule(const std::string& name) {
  for (zf_step_rule r : {ZF_RULE_CONSERVATIVE, ZF_RULE_RANDOM, ZF_RULE_AGGRESSIVE, ZF_RULE_HYBRID})
    if (name == ruleName(r)) return r;
  throw Failure(kUsage, "unknown step rule '" + name + "'");
}

zf_objective parseObjective(const std::string& name) {
  if (name == "exact") return ZF_OBJECTIVE_EXACT;
  if (name == "coarse") return ZF_OBJECTIVE_COARSE;
  throw Failure(kUsage, "unknown objective '" + name + "'");
}

json optionsToJson(const zf_options& o) {
  return {{"rank", o.rank},
          {"max_steps", o.max_steps},
          {"threshold", o.threshold},
          {"rule", ruleName(o.rule)},
          {"switch_at", o.switch_at},
          {"seed", o.seed},
          {"perturb_scale", o.perturb_scale},
          {"max_perturb_tries", o.max_perturb_tries},
          {"objective", o.objective == ZF_OBJECTIVE_COARSE ? "coarse" : "exact"},
          {"tol_active", o.tol_active},
          {"cone_fallback", o.cone_fallback != 0},
          {"backtrack", o.backtrack != 0},
          {"max_backtracks", o.max_backtracks},
          {"record_timing", o.record_timing != 0}};
}

// Keys mirror the descent configuration; unknown keys are rejected.
void applyConfig(const json& j, zf_options& o) {
  if (!j.is_object()) throw Failure(kParse, "config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "rank") o.rank = v.get<int>();
      else if (key == "max_steps") o.max_steps = v.get<int>();
      else if (key == "threshold") o.threshold = v.get<double>();
      else if (key == "rule") o.rule = parseRule(v.get<std::string>());
      else if (key == "switch_at") o.switch_at = v.get<int>();
      else if (key == "seed") o.seed = v.get<std::uint64_t>();
      else if (key == "perturb_scale") o.perturb_scale = v.get<double>();
      else if (key == "max_perturb_tries") o.max_perturb_tries = v.get<int>();
      else if (key == "objective") o.objective = parseObjective(v.get<std::string>());
      else if (key == "tol_active") o.tol_active = v.get<double>();
      else if (key == "cone_fallback") o.cone_fallback = v.get<bool>() ? 1 : 0;
      else if (key == "backtrack") o.backtrack = v.get<bool>() ? 1 : 0;
      else if (key == "max_backtracks") o.max_backtracks = v.get<int>();
      else if (key == "record_timing") o.record_timing = v.get<bool>() ? 1 : 0;
      else throw Failure(kParse, "unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw Failure(kParse, std::string("config: ") + e.what());
  }
}

std::optional<std::uint64_t> seedFromEnv() {
  const char* s = std::getenv("ZONOFIT_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Failure(kUsage, std::string("ZONOFIT_SEED is not an unsigned integer: ") + s);
  }
}

std::vector<int> parseIntList(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Failure(kUsage, what + ": '" + item + "' is not a positive integer");
    }
  }
  if (out.empty()) throw Failure(kUsage, what + " must list at least one value");
  return out;
}

// distance -----------------------------------------------------------------

struct DistanceArgs {
  std::string polytope, zonotope;
  bool coarse = false;
};

int runDistance(const DistanceArgs& a) {
  const PolytopePtr P = loadPolytope(a.polytope);
  const ZonotopePtr Z = loadZonotope(a.zonotope);
  double value = 0.0;
  char* report = nullptr;
  check(zf_distance(P.get(), Z.get(), a.coarse ? 1 : 0, &value, &report), "distance");
  std::cout << take(report) << '\n';
  return kOk;
}

// cone ---------------------------------------------------------------------

struct ConeArgs {
  std::string polytope, zonotope;
  bool coarse = false;
};

int runCone(const ConeArgs& a) {
  const PolytopePtr P = loadPolytope(a.polytope);
  const ZonotopePtr Z = loadZonotope(a.zonotope);
  char* report = nullptr;
  const zf_status s = zf_cone_report(P.get(), Z.get(), a.coarse ? ZF_OBJECTIVE_COARSE : ZF_OBJECTIVE_EXACT, &report);
  if (s == ZF_ERR_LOCALITY) {
    std::cout << take(report) << '\n';
    std::cerr << "zonofit: " << zf_last_error() << '\n';
    return kLocality;
  }
  check(s, "cone");
  std::cout << take(report) << '\n';
  return kOk;
}

// warmstart ----------------------------------------------------------------

struct WarmstartArgs {
  std::string polytope, mode = "auto", out;
  int rank = 0;
  std::uint64_t seed = 0;
};

int runWarmstart(WarmstartArgs a) {
  if (auto env = seedFromEnv()) a.seed = *env;
  const PolytopePtr P = loadPolytope(a.polytope);
  zf_zonotope* z = nullptr;
  check(zf_warmstart(P.get(), a.rank, a.mode == "random" ? ZF_START_RANDOM : ZF_START_AUTO, a.seed, &z), "warmstart");
  const ZonotopePtr Z(z);
  char* text = nullptr;
  check(zf_zonotope_to_json(Z.get(), &text), "warmstart");
  const std::string out = take(text);
  if (a.out.empty()) std::cout << out << '\n';
  else writeText(a.out, out + "\n");
  return kOk;
}

// optimize -----------------------------------------------------------------

struct OptimizeArgs {
  std::string polytope, warmstart, init, out, trace, plot, manifest, config;
  std::optional<int> rank, steps;
  std::optional<double> tol;
  std::optional<std::string> rule, objective;
  std::optional<std::uint64_t> seed;
  bool noTiming = false;
};

int runOptimize(OptimizeArgs a) {
  zf_options o;
  zf_options_default(&o);
  std::string polytopePath = a.polytope, warmstartMode = a.warmstart, initPath = a.init;

  if (!a.config.empty()) {
    json j;
    try {
      j = json::parse(readText(a.config));
    } catch (const json::exception& e) {
      throw Failure(kParse, a.config + ": " + e.what());
    }
    if (j.is_object() && j.contains("config")) {
      // a run manifest: replay its inputs unless overridden on the command line
      applyConfig(j["config"], o);
      const json inputs = j.value("inputs", json::object());
      if (polytopePath.empty() && inputs.value("polytope", json()).is_string())
        polytopePath = inputs["polytope"].get<std::string>();
      if (warmstartMode.empty() && j.value("warmstart", json()).is_string())
        warmstartMode = j["warmstart"].get<std::string>();
      if (initPath.empty() && inputs.value("init", json()).is_string()) initPath = inputs["init"].get<std::string>();
    } else {
      applyConfig(j, o);
    }
  }
  if (a.rank) o.rank = *a.rank;
  if (a.steps) o.max_steps = *a.steps;
  if (a.tol) o.threshold = *a.tol;
  if (a.rule) o.rule = parseRule(*a.rule);
  if (a.objective) o.objective = parseObjective(*a.objective);
  if (a.seed) o.seed = *a.seed;
  if (auto env = seedFromEnv()) o.seed = *env;
  if (a.noTiming) o.record_timing = 0;
  if (warmstartMode.empty()) warmstartMode = "auto";

  if (polytopePath.empty()) throw Failure(kUsage, "a polytope file is required");
  if (warmstartMode != "auto" && warmstartMode != "random" && warmstartMode != "file")
    throw Failure(kUsage, "--warmstart must be auto, random or file");
  if (warmstartMode == "file" && initPath.empty()) throw Failure(kUsage, "--warmstart file needs --init");
  if (warmstartMode != "file" && o.rank < 1) throw Failure(kUsage, "--rank is required");

  const PolytopePtr P = loadPolytope(polytopePath);
  ZonotopePtr Z0;
  if (warmstartMode == "file") {
    Z0 = loadZonotope(initPath);
    if (o.rank == 0) o.rank = zf_zonotope_rank(Z0.get());
  } else {
    zf_zonotope* z = nullptr;
    check(zf_warmstart(P.get(), o.rank, warmstartMode == "random" ? ZF_START_RANDOM : ZF_START_AUTO, o.seed, &z),
          "warmstart");
    Z0.reset(z);
  }

  const std::string manifestPath =
      !a.manifest.empty() ? a.manifest : (a.out.empty() ? std::string("zonofit") : a.out) + ".manifest.json";
  auto absolute = [](const std::string& path) { return std::filesystem::absolute(path).lexically_normal().string(); };
  json manifest = {{"inputs",
                    {{"polytope", absolute(polytopePath)},
                     {"init", initPath.empty() ? json() : json(absolute(initPath))}}},
                   {"warmstart", warmstartMode},
                   {"config", optionsToJson(o)},
                   {"seed", o.seed},
                   {"versions", {{"zonofit", zf_version()}, {"cxx", __cplusplus}}},
                   {"outputs",
                    {{"zonotope", a.out.empty() ? json() : json(a.out)},
                     {"trace", a.trace.empty() ? json() : json(a.trace)},
                     {"plot", a.plot.empty() ? json() : json(a.plot)}}}};

  const auto t0 = std::chrono::steady_clock::now();
  zf_run* raw = nullptr;
  const zf_status s = zf_optimize(P.get(), Z0.get(), &o, &raw);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  manifest["wall_time_s"] = wall;
  if (s != ZF_OK) {
    manifest["termination"] = "Error";
    manifest["error"] = {{"status", zf_status_string(s)}, {"message", zf_last_error()}};
    writeText(manifestPath, manifest.dump(2) + "\n");
    check(s, "optimize");
  }
  const RunPtr run(raw);

  char* text = nullptr;
  check(zf_run_summary_json(run.get(), &text), "optimize");
  const json summary = json::parse(take(text));
  manifest["termination"] = summary["termination"];
  manifest["certificate"] = summary["certificate"];
  manifest["message"] = summary["message"];
  manifest["final_distances"] = {{"exact", summary["final_exact"]}, {"coarse", summary["final_coarse"]}};
  manifest["iterations"] = summary["iterations"];

  zf_zonotope* zf = nullptr;
  check(zf_run_zonotope(run.get(), &zf), "optimize");
  const ZonotopePtr Z(zf);
  check(zf_zonotope_to_json(Z.get(), &text), "optimize");
  const std::string zjson = take(text);
  if (a.out.empty()) std::cout << zjson << '\n';
  else writeText(a.out, zjson + "\n");

  if (!a.trace.empty()) {
    check(zf_run_trace_csv(run.get(), &text), "trace");
    writeText(a.trace, take(text));
  }
  if (!a.plot.empty()) {
    if (zf_polytope_dim(P.get()) == 2) {
      check(zf_render_svg(P.get(), Z.get(), &text), "plot");
      writeText(a.plot, take(text));
    } else {
      std::cerr << "zonofit: plots are planar only, skipping " << a.plot << '\n';
      manifest["outputs"]["plot"] = nullptr;
    }
  }
  writeText(manifestPath, manifest.dump(2) + "\n");
  std::cerr << "zonofit: " << summary["termination"].get<std::string>() << " after "
            << summary["iterations"].get<std::size_t>() << " iterations, d = " << summary["final_exact"].get<double>()
            << '\n';
  return summary["termination"] == "SolverFailure" ? kSolver : kOk;
}

// bench --------------------------------------------------------------------

struct BenchArgs {
  std::string dims, ranks, out, curves;
  int seeds = 5, steps = 100, vertices = 10, randomInits = 3, jobs = 1;
};

struct BenchRun {
  int dim = 0, rank = 0, seed = 0;
  std::string init;
  int initIndex = 0;
  double start = 0.0, final = 0.0;
  std::size_t iterations = 0;
  std::string termination, error;
  std::vector<double> curve;
};

void executeBenchRun(BenchRun& r, int vertices, int steps) {
  zf_polytope* p = nullptr;
  zf_status s = zf_random_polytope(r.dim, std::max(vertices, r.dim + 2), static_cast<std::uint64_t>(r.seed), &p);
  const PolytopePtr P(p);
  if (s != ZF_OK) {
    r.error = zf_last_error();
    return;
  }
  const bool warm = r.init == "warmstart";
  // random inits use distinct streams derived from the instance seed
  const std::uint64_t initSeed = warm ? 0 : 1000003ULL * static_cast<std::uint64_t>(r.seed) + static_cast<std::uint64_t>(r.initIndex);
  zf_zonotope* z = nullptr;
  s = zf_warmstart(P.get(), r.rank, warm ? ZF_START_AUTO : ZF_START_RANDOM, initSeed, &z);
  const ZonotopePtr Z0(z);
  if (s != ZF_OK) {
    r.error = zf_last_error();
    return;
  }
  zf_options o;
  zf_options_default(&o);
  o.rank = r.rank;
  o.max_steps = steps;
  o.seed = static_cast<std::uint64_t>(r.seed);
  o.rule = ZF_RULE_HYBRID;
  o.record_timing = 0;
  zf_run* raw = nullptr;
  s = zf_optimize(P.get(), Z0.get(), &o, &raw);
  const RunPtr run(raw);
  if (s != ZF_OK) {
    r.error = std::string(zf_status_string(s)) + ": " + zf_last_error();
    return;
  }
  size_t count = 0;
  zf_run_objective_curve(run.get(), nullptr, 0, &count);
  r.curve.resize(count);
  zf_run_objective_curve(run.get(), r.curve.data(), r.curve.size(), &count);
  r.start = r.curve.front();
  r.final = r.curve.back();
  r.iterations = zf_run_iterations(run.get());
  char* text = nullptr;
  if (zf_run_summary_json(run.get(), &text) == ZF_OK) r.termination = json::parse(take(text))["termination"];
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int runBench(const BenchArgs& a) {
  const std::vector<int> dims = parseIntList(a.dims, "--dims");
  const std::vector<int> ranks = parseIntList(a.ranks, "--ranks");
  if (a.seeds < 1 || a.steps < 1 || a.randomInits < 0 || a.jobs < 1)
    throw Failure(kUsage, "--seeds, --steps and --jobs must be positive");

  std::vector<BenchRun> runs;
  for (int d : dims)
    for (int n : ranks)
      for (int seed = 0; seed < a.seeds; ++seed) {
        if (n < d) continue;
        runs.push_back({d, n, seed, "warmstart", 0});
        for (int k = 0; k < a.randomInits; ++k) runs.push_back({d, n, seed, "random" + std::to_string(k), k});
      }
  for (int d : dims)
    for (int n : ranks)
      if (n < d) std::cerr << "zonofit: skipping rank " << n << " below dimension " << d << '\n';

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      try {
        executeBenchRun(runs[i], a.vertices, a.steps);
      } catch (const std::exception& e) {
        runs[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < a.jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ostringstream csv;
  csv << "dim,rank,seed,init,d_start,d_final,iterations,termination,failed\n";
  csv.precision(17);
  for (const BenchRun& r : runs)
    csv << r.dim << ',' << r.rank << ',' << r.seed << ',' << r.init << ',' << r.start << ',' << r.final << ','
        << r.iterations << ',' << (r.error.empty() ? r.termination : "Error") << ',' << (r.error.empty() ? 0 : 1)
        << '\n';
  if (a.out.empty()) std::cout << csv.str();
  else writeText(a.out, csv.str());

  // median objective per iteration; finished runs hold their final value
  std::ostringstream curves;
  curves << "dim,rank,init,iter,median_d\n";
  curves.precision(17);
  std::cerr << "dim rank init       runs failed median_final\n";
  for (int d : dims)
    for (int n : ranks)
      for (const std::string kind : {"warmstart", "random"}) {
        std::vector<const BenchRun*> group;
        int failed = 0;
        for (const BenchRun& r : runs)
          if (r.dim == d && r.rank == n && (r.init == kind || (kind == "random" && r.init != "warmstart"))) {
            if (r.error.empty()) group.push_back(&r);
            else ++failed;
          }
        if (group.empty() && failed == 0) continue;
        std::size_t len = 0;
        for (const BenchRun* r : group) len = std::max(len, r->curve.size());
        for (std::size_t k = 0; k < len; ++k) {
          std::vector<double> at;
          for (const BenchRun* r : group) at.push_back(r->curve[std::min(k, r->curve.size() - 1)]);
          curves << d << ',' << n << ',' << kind << ',' << k << ',' << median(at) << '\n';
        }
        std::vector<double> finals;
        for (const BenchRun* r : group) finals.push_back(r->final);
        char line[128];
        std::snprintf(line, sizeof line, "%3d %4d %-10s %4zu %6d %.6g\n", d, n, kind.c_str(), group.size() + failed,
                      failed, median(finals));
        std::cerr << line;
      }
  if (!a.curves.empty()) writeText(a.curves, curves.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate a polytope by a zonotope of given rank in Hausdorff distance"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("zonofit ") + zf_version());

  DistanceArgs da;
  auto* distance = app.add_subcommand("distance", "Hausdorff distance between a polytope and a zonotope");
  distance->add_option("polytope", da.polytope, "Polytope JSON")->required();
  distance->add_option("zonotope", da.zonotope, "Zonotope JSON")->required();
  distance->add_flag("--coarse", da.coarse, "Distance between vertex sets");

  OptimizeArgs oa;
  int rank = 0, steps = 0;
  double tol = 0.0;
  std::string rule, objective;
  std::uint64_t seed = 0;
  auto* optimize = app.add_subcommand("optimize", "Fit a zonotope by feasibility-cone guided descent");
  optimize->add_option("polytope", oa.polytope, "Polytope JSON (optional when replaying a manifest)");
  auto* oRank = optimize->add_option("--rank,-n", rank, "Number of generators");
  auto* oSteps = optimize->add_option("--steps,-N", steps, "Iteration cap");
  auto* oTol = optimize->add_option("--tol", tol, "Stop once the distance is at most this");
  auto* oRule = optimize->add_option("--rule", rule, "conservative, random, aggressive or hybrid");
  auto* oObj = optimize->add_option("--objective", objective, "exact or coarse");
  auto* oSeed = optimize->add_option("--seed", seed, "Random seed (ZONOFIT_SEED overrides)");
  optimize->add_option("--warmstart", oa.warmstart, "auto, random or file");
  optimize->add_option("--init", oa.init, "Initial zonotope JSON for --warmstart file");
  optimize->add_option("--out,-o", oa.out, "Final zonotope JSON (default stdout)");
  optimize->add_option("--trace", oa.trace, "Trace CSV");
  optimize->add_option("--plot", oa.plot, "SVG plot (planar inputs only)");
  optimize->add_option("--manifest", oa.manifest, "Run manifest (default <out>.manifest.json)");
  optimize->add_option("--config", oa.config, "Configuration JSON or a manifest to replay");
  optimize->add_flag("--no-timing", oa.noTiming, "Leave the ms column at zero");

  ConeArgs ca;
  auto* cone = app.add_subcommand("cone", "Feasibility cone, interior margin and certificate");
  cone->add_option("polytope", ca.polytope, "Polytope JSON")->required();
  cone->add_option("zonotope", ca.zonotope, "Zonotope JSON")->required();
  cone->add_flag("--coarse", ca.coarse, "Use the vertex-set objective");

  WarmstartArgs wa;
  auto* warm = app.add_subcommand("warmstart", "Initial zonotope for a polytope");
  warm->add_option("polytope", wa.polytope, "Polytope JSON")->required();
  warm->add_option("--rank,-n", wa.rank, "Number of generators")->required()->check(CLI::PositiveNumber);
  warm->add_option("--mode", wa.mode, "auto or random")->check(CLI::IsMember({"auto", "random"}));
  warm->add_option("--seed", wa.seed, "Random seed (ZONOFIT_SEED overrides)");
  warm->add_option("--out,-o", wa.out, "Zonotope JSON (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Warmstart against random starts on random polytopes");
  bench->add_option("--dims", ba.dims, "Comma separated dimensions")->required();
  bench->add_option("--ranks", ba.ranks, "Comma separated ranks")->required();
  bench->add_option("--seeds", ba.seeds, "Instances per dimension and rank");
  bench->add_option("--steps", ba.steps, "Iteration cap per run");
  bench->add_option("--vertices", ba.vertices, "Random points per instance");
  bench->add_option("--random-inits", ba.randomInits, "Random starts per instance");
  bench->add_option("--jobs,-j", ba.jobs, "Worker threads");
  bench->add_option("--out,-o", ba.out, "Per-run CSV (default stdout)");
  bench->add_option("--curves", ba.curves, "Median curve CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*distance) return runDistance(da);
    if (*cone) return runCone(ca);
    if (*warm) return runWarmstart(wa);
    if (*bench) return runBench(ba);
    if (*optimize) {
      if (oRank->count()) oa.rank = rank;
      if (oSteps->count()) oa.steps = steps;
      if (oTol->count()) oa.tol = tol;
      if (oRule->count()) oa.rule = rule;
      if (oObj->count()) oa.objective = objective;
      if (oSeed->count()) oa.seed = seed;
      return runOptimize(oa);
    }
  } catch (const Failure& f) {
    std::cerr << "zonofit: " << f.what() << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "zonofit: " << e.what() << '\n';
    return kSolver;
  }
  return kUsage;
}

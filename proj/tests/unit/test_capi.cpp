#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include "zonofit/zonofit.h"

#include <cmath>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

const char* kSquareP = R"({"vertices": [[0.3,0],[1.3,0],[1.3,1],[0.3,1]]})";
const char* kSquareZ = R"({"generators": [[1,0],[0,1]], "translation": [0,0]})";
// unit square rotated by a quarter turn about its centre and scaled by 1.05
const char* kRotatedP =
    R"({"vertices": [[-0.24246212024587488,0.5],[0.5,-0.24246212024587488],)"
    R"([1.2424621202458749,0.5],[0.5,1.2424621202458749]]})";

std::string take(char* s) {
  std::string out = s ? s : "";
  zf_string_free(s);
  return out;
}

struct Instance {
  zf_polytope* p = nullptr;
  zf_zonotope* z = nullptr;
  Instance(const char* pj, const char* zj) {
    REQUIRE(zf_polytope_from_json(pj, &p) == ZF_OK);
    REQUIRE(zf_zonotope_from_json(zj, &z) == ZF_OK);
  }
  ~Instance() {
    zf_polytope_free(p);
    zf_zonotope_free(z);
  }
};

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(zf_version()).size() > 0);
  CHECK(std::string(zf_status_string(ZF_OK)) == "ok");
  CHECK(std::string(zf_status_string(ZF_ERR_LOCALITY)) == "locality violation");
}

TEST_CASE("parse errors map to the parse status") {
  zf_polytope* p = nullptr;
  CHECK(zf_polytope_from_json("{not json", &p) == ZF_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::string(zf_last_error()).find("Parse") != std::string::npos);
  CHECK(zf_polytope_from_json(R"({"points": []})", &p) == ZF_ERR_PARSE);
  zf_zonotope* z = nullptr;
  CHECK(zf_zonotope_from_json(R"({"generators": [[1,"a"]]})", &z) == ZF_ERR_PARSE);
  CHECK(zf_polytope_from_json(nullptr, &p) == ZF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("handle accessors and JSON round trip") {
  Instance in(kSquareP, kSquareZ);
  CHECK(zf_polytope_dim(in.p) == 2);
  CHECK(zf_polytope_vertex_count(in.p) == 4);
  CHECK(zf_zonotope_rank(in.z) == 2);
  CHECK(zf_zonotope_dim(in.z) == 2);
  char* s = nullptr;
  REQUIRE(zf_zonotope_to_json(in.z, &s) == ZF_OK);
  const std::string first = take(s);
  zf_zonotope* again = nullptr;
  REQUIRE(zf_zonotope_from_json(first.c_str(), &again) == ZF_OK);
  REQUIRE(zf_zonotope_to_json(again, &s) == ZF_OK);
  CHECK(take(s) == first);
  zf_zonotope_free(again);

  zf_polytope* zp = nullptr;
  REQUIRE(zf_zonotope_as_polytope(in.z, &zp) == ZF_OK);
  CHECK(zf_polytope_vertex_count(zp) == 4);
  zf_polytope_free(zp);
}

TEST_CASE("distance of a translated square") {
  Instance in(kSquareP, kSquareZ);
  double v = -1.0;
  char* rep = nullptr;
  REQUIRE(zf_distance(in.p, in.z, 0, &v, &rep) == ZF_OK);
  CHECK(v == doctest::Approx(0.3).epsilon(1e-12));
  const json j = json::parse(take(rep));
  CHECK(j["kind"] == "exact");
  CHECK(j["pairs"].size() >= 2);
  REQUIRE(zf_distance(in.p, in.z, 1, &v, nullptr) == ZF_OK);
  CHECK(v == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("dimension mismatch is invalid input") {
  Instance in(kSquareP, R"({"generators": [[1,0,0],[0,1,0],[0,0,1]]})");
  double v = 0.0;
  CHECK(zf_distance(in.p, in.z, 0, &v, nullptr) == ZF_ERR_INVALID_INPUT);
  CHECK(std::string(zf_last_error()).find("DimensionMismatch") != std::string::npos);
}

TEST_CASE("cone report on the rotated square") {
  Instance in(kRotatedP, kSquareZ);
  char* rep = nullptr;
  REQUIRE(zf_cone_report(in.p, in.z, ZF_OBJECTIVE_EXACT, &rep) == ZF_OK);
  const json j = json::parse(take(rep));
  CHECK(j["interior"] == true);
  CHECK(j["direction_status"] == "Descent");
  CHECK(j["A"].size() == 4);
  CHECK(j["A"][0].size() == 6);
}

TEST_CASE("cone report flags a locality violation") {
  // P = Z: every vertex of P sits on a vertex of Z
  Instance in(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})", kSquareZ);
  char* rep = nullptr;
  CHECK(zf_cone_report(in.p, in.z, ZF_OBJECTIVE_EXACT, &rep) == ZF_ERR_LOCALITY);
  const json j = json::parse(take(rep));
  CHECK(j["locality"]["ok"] == false);
  int ok = 1;
  REQUIRE(zf_locality_report(in.p, in.z, &ok, nullptr) == ZF_OK);
  CHECK(ok == 0);
}

TEST_CASE("optimize reduces the distance and is deterministic") {
  zf_polytope* p = nullptr;
  REQUIRE(zf_random_polytope(2, 9, 11, &p) == ZF_OK);
  zf_zonotope* z0 = nullptr;
  REQUIRE(zf_warmstart(p, 3, ZF_START_RANDOM, 5, &z0) == ZF_OK);
  double d0 = 0.0;
  REQUIRE(zf_distance(p, z0, 0, &d0, nullptr) == ZF_OK);

  zf_options o;
  zf_options_default(&o);
  o.max_steps = 30;
  o.seed = 3;
  o.rule = ZF_RULE_HYBRID;
  zf_run* a = nullptr;
  zf_run* b = nullptr;
  REQUIRE(zf_optimize(p, z0, &o, &a) == ZF_OK);
  REQUIRE(zf_optimize(p, z0, &o, &b) == ZF_OK);

  const size_t iters = zf_run_iterations(a);
  CHECK(iters <= 30);
  std::vector<double> curve(iters + 1);
  size_t count = 0;
  REQUIRE(zf_run_objective_curve(a, curve.data(), curve.size(), &count) == ZF_OK);
  CHECK(count == iters + 1);
  CHECK(curve.back() <= d0 + 1e-12);

  char* sa = nullptr;
  char* sb = nullptr;
  zf_zonotope_free(z0);
  zf_zonotope* fa = nullptr;
  REQUIRE(zf_run_zonotope(a, &fa) == ZF_OK);
  zf_zonotope* fb = nullptr;
  REQUIRE(zf_run_zonotope(b, &fb) == ZF_OK);
  REQUIRE(zf_zonotope_to_json(fa, &sa) == ZF_OK);
  REQUIRE(zf_zonotope_to_json(fb, &sb) == ZF_OK);
  CHECK(take(sa) == take(sb));

  char* summary = nullptr;
  REQUIRE(zf_run_summary_json(a, &summary) == ZF_OK);
  const json j = json::parse(take(summary));
  CHECK(j["final_exact"].get<double>() == doctest::Approx(curve.back()).epsilon(1e-12));
  CHECK(j["iterations"].get<size_t>() == iters);

  char* csv = nullptr;
  REQUIRE(zf_run_trace_csv(a, &csv) == ZF_OK);
  CHECK(take(csv).rfind("iter,d_exact,d_coarse,step,rule,active_pairs,cone_status,ms\n", 0) == 0);

  zf_zonotope_free(fa);
  zf_zonotope_free(fb);
  zf_run_free(a);
  zf_run_free(b);
  zf_polytope_free(p);
}

TEST_CASE("option validation") {
  Instance in(kSquareP, kSquareZ);
  zf_options o;
  zf_options_default(&o);
  o.rule = static_cast<zf_step_rule>(17);
  zf_run* r = nullptr;
  CHECK(zf_optimize(in.p, in.z, &o, &r) == ZF_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  zf_options_default(&o);
  o.max_perturb_tries = -1;
  CHECK(zf_optimize(in.p, in.z, &o, &r) == ZF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("perturbation budget surfaces its own status") {
  // parallel generators break general position and a zero budget forbids any jitter
  Instance in(kRotatedP, R"({"generators": [[0.5,0],[0.5,0],[0,1]]})");
  zf_options o;
  zf_options_default(&o);
  o.max_perturb_tries = 0;
  zf_run* r = nullptr;
  CHECK(zf_optimize(in.p, in.z, &o, &r) == ZF_ERR_PERTURBATION_BUDGET);
}

TEST_CASE("warmstart of a symmetric hexagon is exact") {
  zf_polytope* p = nullptr;
  REQUIRE(zf_polytope_from_json(R"({"vertices": [[0,0],[2,0],[3,1],[3,2],[1,2],[0,1]]})", &p) == ZF_OK);
  zf_zonotope* z = nullptr;
  REQUIRE(zf_warmstart(p, 3, ZF_START_AUTO, 0, &z) == ZF_OK);
  double v = 1.0;
  REQUIRE(zf_distance(p, z, 0, &v, nullptr) == ZF_OK);
  CHECK(v <= 1e-9);
  zf_zonotope_free(z);
  zf_polytope_free(p);
}

TEST_CASE("svg output and its planar restriction") {
  Instance in(kSquareP, kSquareZ);
  char* svg = nullptr;
  REQUIRE(zf_render_svg(in.p, in.z, &svg) == ZF_OK);
  CHECK(take(svg).find("<svg") != std::string::npos);

  zf_polytope* p3 = nullptr;
  zf_zonotope* z3 = nullptr;
  REQUIRE(zf_random_polytope(3, 10, 1, &p3) == ZF_OK);
  REQUIRE(zf_random_zonotope(4, 3, 1, &z3) == ZF_OK);
  CHECK(zf_render_svg(p3, z3, &svg) == ZF_ERR_INVALID_INPUT);
  zf_polytope_free(p3);
  zf_zonotope_free(z3);
}

TEST_CASE("random generators validate their arguments") {
  zf_polytope* p = nullptr;
  CHECK(zf_random_polytope(2, 2, 0, &p) == ZF_ERR_INVALID_ARGUMENT);
  zf_zonotope* z = nullptr;
  CHECK(zf_random_zonotope(1, 2, 0, &z) == ZF_ERR_INVALID_ARGUMENT);
}

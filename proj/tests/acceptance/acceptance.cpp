// Acceptance checks, one PASS/FAIL line per criterion.
#include "fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

using namespace zonofit;
using fixtures::vec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budgetSeconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool inBudget = secs <= budgetSeconds;
  const bool ok = out.pass && inBudget;
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s | %s | %.2fs (budget %.0fs%s)\n", ok ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), secs, budgetSeconds, inBudget ? "" : ", exceeded");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// 1. analytic gradients against central differences
Outcome gradients() {
  Rng rng(1001);
  int instances = 0, grads = 0, bad = 0;
  double worst = 0.0;
  std::set<std::pair<int, int>> sideCodim;
  for (int t = 0; instances < 120 && t < 5000; ++t) {
    const Index d = 2 + t % 2;
    const Index n = d + 1 + (t / 2) % 2;
    const Polytope P = randomPolytope(rng, d, 5 + t % 5);
    const Zonotope Z = randomZonotope(rng, n, d);
    if (!checkLocality(P, Z).ok()) continue;
    ++instances;
    for (const auto& term : localTerms(P, Z)) {
      if (term.evaluate(Z) < 1e-6) continue;
      const ParamVector g = termGradient(term, Z);
      const ParamVector f = finiteDifferenceGradient(term, Z, 1e-6);
      const double rel = (g - f).norm() / std::max(1.0, g.norm());
      worst = std::max(worst, rel);
      ++grads;
      if (!(rel <= 1e-5)) ++bad;
      const int codim = term.side == PairSide::PVertex ? static_cast<int>(d - term.freeGenerators.size())
                                                       : static_cast<int>(term.polytopeFace.codim());
      sideCodim.insert({static_cast<int>(term.side), codim});
    }
  }
  std::string kinds;
  for (auto [s, c] : sideCodim) kinds += std::string(kinds.empty() ? "" : ",") + (s == 0 ? "P" : "Z") + std::to_string(c);
  return {instances >= 100 && bad == 0,
          std::to_string(instances) + " instances, " + std::to_string(grads) + " gradients, " + std::to_string(bad) +
              " over 1e-5, worst rel " + fmt("%.2e", worst) + ", side/codim " + kinds};
}

// 2. worked example: cone matrix, rays, lineality, interior
Outcome workedExample() {
  const Polytope P = fixtures::rotatedSquare(0.05);
  const Zonotope Z = fixtures::unitSquare();
  const auto dist = hausdorffDistance(P, Z);
  const auto cone = buildCone(dist.pairs, 2, 2);
  if (cone.rows.rows() != 4) return {false, "expected 4 achieving pairs, got " + std::to_string(cone.rows.rows())};
  // printed layout (g_11, g_21, mu_1, g_12, g_22, mu_2) to ours
  const std::array<Index, 6> perm = {paramIndex(0, 0, 2), paramIndex(1, 0, 2), muIndex(2, 0, 2),
                                     paramIndex(0, 1, 2), paramIndex(1, 1, 2), muIndex(2, 1, 2)};
  auto toOurs = [&](std::initializer_list<double> v) {
    ParamVector x(6);
    Index k = 0;
    for (double a : v) x(perm[static_cast<std::size_t>(k++)]) = a;
    return x;
  };
  const std::vector<ParamVector> printed = {toOurs({0, -1, -2, 0, 0, 0}), toOurs({0, 0, 0, -1, 0, -2}),
                                            toOurs({2, 1, 2, 0, 0, 0}), toOurs({0, 0, 0, 1, 2, 2})};
  double worstRow = 0.0;
  std::vector<bool> used(4, false);
  for (Index r = 0; r < 4; ++r) {
    const Vector ours = cone.rows.row(r).transpose() / cone.rows.row(r).cwiseAbs().maxCoeff();
    double best = 1e300;
    std::size_t bestK = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (used[k]) continue;
      const double e = (ours - printed[k] / printed[k].cwiseAbs().maxCoeff()).cwiseAbs().maxCoeff();
      if (e < best) best = e, bestK = k;
    }
    used[bestK] = true;
    worstRow = std::max(worstRow, best);
  }
  const Matrix An = cone.rows.rowwise().normalized();
  double rayMin = 1e300, linMax = 0.0;
  for (const auto& v : {toOurs({1, 0, 0, 0, 0, 0}), toOurs({0, 0, 0, 0, 1, 0}), toOurs({0, 0, 0, 0, 1, -1}),
                        toOurs({1, -2, 0, 0, 1, -1})})
    rayMin = std::min(rayMin, (An * v).minCoeff());
  for (const auto& l : {toOurs({0, -2, 1, 0, 0, 0}), toOurs({0, 0, 0, -2, 0, 1})})
    linMax = std::max(linMax, (An * l).cwiseAbs().maxCoeff());
  const ConeInterior ci = coneInteriorPoint(cone.rows);
  const auto dir = descentDirection(clarkeSubdifferential(P, Z), cone);
  const bool ok = worstRow <= 1e-6 && rayMin >= -1e-9 && linMax <= 1e-9 && ci.interior && ci.margin > 1e-8 &&
                  dir.certificate == Certificate::None;
  return {ok, "d=" + fmt("%.10f", dist.value) + ", row err " + fmt("%.1e", worstRow) + ", min A v " +
                  fmt("%.1e", rayMin) + ", max |A l| " + fmt("%.1e", linMax) + ", t*=" + fmt("%.3e", ci.margin) +
                  ", " + directionStatusName(dir.status) + " (not a local minimum)"};
}

// 3. conservative descent is monotone
Outcome conservativeMonotone() {
  int steps = 0, violations = 0, strictViolations = 0, runs = 0;
  double worst = -1e300;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(5000 + seed);
    const Polytope P = randomPolygon(rng, 5 + static_cast<int>(seed % 5));
    const Index n = 3 + static_cast<Index>(seed % 2);
    DescentConfig cfg;
    cfg.rank = n;
    cfg.maxSteps = 100;
    cfg.rngSeed = seed;
    cfg.stepRule = StepRule::Conservative;
    const auto res = optimize(P, randomStart(P, n, rng), cfg);
    ++runs;
    for (const auto& r : res.trace.records) {
      if (r.coneStatus != "Descent") continue;
      ++steps;
      worst = std::max(worst, r.dAfter - r.dExact);
      if (r.dAfter >= r.dExact + 1e-12) ++violations;
      if (!(r.dAfter < r.dExact)) ++strictViolations;
    }
  }
  return {violations == 0 && steps > 0,
          std::to_string(runs) + " runs, " + std::to_string(steps) + " descent steps, " + std::to_string(violations) +
              " violations (" + std::to_string(strictViolations) + " without slack), max change " + fmt("%.2e", worst)};
}

// rounded coordinates for set comparison
std::set<std::vector<long long>> keyed(const Matrix& pts) {
  std::set<std::vector<long long>> s;
  for (Index i = 0; i < pts.rows(); ++i) {
    std::vector<long long> k;
    for (Index j = 0; j < pts.cols(); ++j) k.push_back(std::llround(pts(i, j) * 1e8));
    s.insert(k);
  }
  return s;
}

// vertices of the hull of a 3-D point set: points lying on supporting planes
// whose normals span space
Matrix hullVertices3D(const Matrix& pts) {
  const Index m = pts.rows();
  const double scale = pts.cwiseAbs().maxCoeff() + 1.0;
  std::vector<Vector> normals;
  std::vector<double> offsets;
  for (Index a = 0; a < m; ++a)
    for (Index b = a + 1; b < m; ++b)
      for (Index c = b + 1; c < m; ++c) {
        Eigen::Vector3d u = (pts.row(b) - pts.row(a)).transpose();
        Eigen::Vector3d v = (pts.row(c) - pts.row(a)).transpose();
        Eigen::Vector3d nrm = u.cross(v);
        if (nrm.norm() < 1e-9 * scale * scale) continue;
        nrm.normalize();
        double off = nrm.dot(pts.row(a).transpose());
        const Vector side = pts * nrm;
        const double tol = 1e-9 * scale;
        if ((side.array() <= off + tol).all()) {
        } else if ((side.array() >= off - tol).all()) {
          nrm = -nrm;
          off = -off;
        } else {
          continue;
        }
        normals.push_back(nrm);
        offsets.push_back(off);
      }
  std::vector<Index> keep;
  for (Index i = 0; i < m; ++i) {
    Matrix N(0, 3);
    for (std::size_t k = 0; k < normals.size(); ++k)
      if (std::abs(normals[k].dot(pts.row(i).transpose()) - offsets[k]) < 1e-9 * scale) {
        N.conservativeResize(N.rows() + 1, 3);
        N.row(N.rows() - 1) = normals[k].transpose();
      }
    if (N.rows() >= 3 && Eigen::FullPivLU<Matrix>(N).rank() == 3) keep.push_back(i);
  }
  Matrix out(static_cast<Index>(keep.size()), 3);
  for (std::size_t k = 0; k < keep.size(); ++k) out.row(static_cast<Index>(k)) = pts.row(keep[k]);
  return out;
}

// 4. vertex enumeration against hulls of all cubical points
Outcome vertexEnumeration() {
  Rng rng(4004);
  int cases = 0, bad = 0;
  for (auto [n, d] : std::vector<std::pair<Index, Index>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
    for (int k = 0; k < 10; ++k) {
      const Zonotope Z = randomZonotope(rng, n, d);
      Matrix cubical(Index{1} << n, d);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        cubical.row(static_cast<Index>(mask)) = Z.point(BitVector::fromMask(mask, n)).transpose();
      const Matrix hull = d == 2 ? convexHull2D(cubical) : hullVertices3D(cubical);
      const auto verts = enumerateVertices(Z);
      Matrix ours(static_cast<Index>(verts.size()), d);
      for (std::size_t v = 0; v < verts.size(); ++v) ours.row(static_cast<Index>(v)) = verts[v].point.transpose();
      ++cases;
      if (keyed(hull) != keyed(ours) || verts.size() != expectedVertexCount(n, d)) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " zonotopes, " + std::to_string(bad) + " mismatches"};
}

// boundary samples of a convex polygon, evenly spaced by arc length
Matrix sampleBoundary(const Matrix& poly, int count) {
  const Index m = poly.rows();
  double perimeter = 0.0;
  for (Index i = 0; i < m; ++i) perimeter += (poly.row((i + 1) % m) - poly.row(i)).norm();
  Matrix out(count, 2);
  const double h = perimeter / count;
  Index edge = 0;
  double edgeStart = 0.0;
  for (int k = 0; k < count; ++k) {
    const double s = k * h;
    while (edge < m - 1 && s > edgeStart + (poly.row(edge + 1) - poly.row(edge)).norm()) {
      edgeStart += (poly.row(edge + 1) - poly.row(edge)).norm();
      ++edge;
    }
    const Eigen::RowVector2d a = poly.row(edge), b = poly.row((edge + 1) % m);
    const double len = (b - a).norm();
    out.row(k) = a + std::min(1.0, (s - edgeStart) / len) * (b - a);
  }
  return out;
}

bool insidePolygon(const Eigen::RowVector2d& x, const Matrix& poly) {
  for (Index i = 0; i < poly.rows(); ++i) {
    const Eigen::RowVector2d a = poly.row(i), b = poly.row((i + 1) % poly.rows());
    if ((b(0) - a(0)) * (x(1) - a(1)) - (b(1) - a(1)) * (x(0) - a(0)) < 0.0) return false;
  }
  return true;
}

// max over samples of A of the distance to the body sampled by B; the
// distance is 1-Lipschitz, so a running bound skips points that cannot win
double directedSampled(const Matrix& A, const Matrix& polyB, const Matrix& B) {
  auto distance = [&](Index i) {
    const Eigen::RowVector2d x = A.row(i);
    return insidePolygon(x, polyB) ? 0.0 : std::sqrt((B.rowwise() - x).rowwise().squaredNorm().minCoeff());
  };
  // a coarse pass seeds the maximum so that the full pass prunes well
  double best = 0.0;
  for (Index i = 0; i < A.rows(); i += 500) best = std::max(best, distance(i));
  double bound = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < A.rows(); ++i) {
    if (i > 0) bound += (A.row(i) - A.row(i - 1)).norm();
    if (bound <= best) continue;
    bound = distance(i);
    best = std::max(best, bound);
  }
  return best;
}

// 5. exact distance against dense boundary sampling
Outcome hausdorffOracle() {
  Rng rng(5005);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Polytope P = randomPolygon(rng, 4 + t % 6);
    const Zonotope Z = randomZonotope(rng, 2 + t % 4, 2);
    const Matrix polyP = convexHull2D(P.vertices());
    const Matrix polyZ = fixtures::zonotopePolygon(Z);
    const Matrix sP = sampleBoundary(polyP, 100000);
    const Matrix sZ = sampleBoundary(polyZ, 100000);
    const double brute = std::max(directedSampled(sP, polyZ, sZ), directedSampled(sZ, polyP, sP));
    worst = std::max(worst, std::abs(brute - hausdorffDistance(P, Z).value));
  }
  return {worst <= 1e-3, "20 instances, max abs difference " + fmt("%.2e", worst)};
}

// 6. symmetric polygons are recovered by the warmstart
Outcome warmstartExact() {
  Rng rng(6006);
  int ok = 0;
  double worst = 0.0;
  int maxIters = 0;
  for (int t = 0; t < 10; ++t) {
    const Index n = 2 + t % 4;
    const Polytope P = asPolytope(fixtures::randomSymmetricZonotope(rng, n));
    DescentConfig cfg;
    cfg.rank = n;
    cfg.maxSteps = 2;
    cfg.rngSeed = static_cast<std::uint64_t>(t);
    const auto res = optimize(P, warmstart(P, n, rng), cfg);
    worst = std::max(worst, res.trace.finalExact);
    maxIters = std::max(maxIters, static_cast<int>(res.trace.records.size()));
    if (res.trace.finalExact <= 1e-9 && res.trace.termination == Termination::Threshold) ++ok;
  }
  return {ok == 10, std::to_string(ok) + "/10 exact, max d " + fmt("%.2e", worst) + ", max iterations " +
                        std::to_string(maxIters)};
}

// 7. recovery of random zonotopes
Outcome recovery() {
  int reached = 0, beatsMedian = 0, total = 0;
  for (Index n : {3, 4}) {
    for (int s = 0; s < 10; ++s) {
      Rng rng(7000 + 100 * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(s));
      const Zonotope target = randomZonotope(rng, n, 2);
      const Polytope P = asPolytope(target);
      DescentConfig cfg;
      cfg.rank = n;
      cfg.maxSteps = 500;
      cfg.rngSeed = static_cast<std::uint64_t>(s);
      const auto warm = optimize(P, warmstart(P, n, rng), cfg);
      std::vector<double> rnd;
      for (int r = 0; r < 3; ++r) {
        cfg.rngSeed = static_cast<std::uint64_t>(100 + r);
        rnd.push_back(optimize(P, randomStart(P, n, rng), cfg).trace.finalExact);
      }
      std::sort(rnd.begin(), rnd.end());
      ++total;
      if (warm.trace.finalExact <= 1e-3 * P.diameter()) ++reached;
      if (warm.trace.finalExact <= rnd[1]) ++beatsMedian;
    }
  }
  const bool ok = reached * 10 >= total * 8 && beatsMedian * 10 >= total * 8;
  return {ok, std::to_string(reached) + "/" + std::to_string(total) + " reached 1e-3 diam, " +
                  std::to_string(beatsMedian) + "/" + std::to_string(total) + " at or below the random median"};
}

// 8. certificates at constructed coarse minima
Outcome certificates() {
  Rng rng(8008);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  int built = 0, certified = 0, decreases = 0;
  double worstDrop = 0.0;
  for (int t = 0; t < 500 && built < 10; ++t) {
    const Index d = 2 + t % 2;
    const Zonotope Z = randomZonotope(rng, d + 1 + (t / 2) % 2, d);
    const auto made = fixtures::coarseMinimumAround(Z, 0.01, rng);
    if (!made) continue;
    ++built;
    const Polytope& P = *made;
    const auto sub = clarkeSubdifferential(P, Z, kTolActive, Objective::Coarse);
    const auto dir = descentDirection(sub, buildCone(sub.activePairs, Z.rank(), d), {Objective::Coarse});
    if (dir.status == DirectionStatus::ConeEmptyInterior && dir.certificate == Certificate::CertifiedLocalMinOfCoarse)
      ++certified;
    const double base = coarseHausdorffDistance(P, Z).value;
    for (int k = 0; k < 200; ++k) {
      ParamVector x = toParams(Z);
      ParamVector delta(x.size());
      for (Index i = 0; i < x.size(); ++i) delta(i) = U(rng);
      x += 1e-4 * delta / delta.norm();
      const double drop = base - coarseHausdorffDistance(P, fromParams(x, Z.rank(), d)).value;
      worstDrop = std::max(worstDrop, drop);
      if (drop > 1e-10) ++decreases;
    }
  }
  return {built == 10 && certified == 10 && decreases == 0,
          std::to_string(certified) + "/" + std::to_string(built) + " certified, " + std::to_string(decreases) +
              " decreasing perturbations, max drop " + fmt("%.2e", worstDrop)};
}

// 9. pushforward properness along the printed family
Outcome pushforwardThreshold() {
  Matrix Q(3, 2);
  Q << 1, 2, 1, 1, 2, 0;
  const Zonotope Z(Q, Vector::Zero(2));
  std::string detail;
  bool ok = true;
  for (double eps : {0.2, 0.4, 0.6, 0.8, 1.0}) {
    Matrix G = Q;
    G(1, 0) -= eps;
    const bool proper = isPushforwardProper(Z, Zonotope(G, Vector::Zero(2)));
    ok = ok && (proper == (eps < 0.5));
    detail += fmt("eps %.1f ", eps) + (proper ? "proper" : "not proper") + (eps < 1.0 ? ", " : "");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  run(1, "gradients match central differences", 120, gradients);
  run(2, "worked example cone", 1, workedExample);
  run(3, "conservative descent is monotone", 300, conservativeMonotone);
  run(4, "vertex enumeration oracle", 60, vertexEnumeration);
  run(5, "distance against boundary sampling", 120, hausdorffOracle);
  run(6, "warmstart exactness", 30, warmstartExact);
  run(7, "recovery of random zonotopes", 600, recovery);
  run(8, "coarse minimum certificates", 120, certificates);
  run(9, "pushforward properness threshold", 1, pushforwardThreshold);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

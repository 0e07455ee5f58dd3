#include "zonofit/hausdorff.hpp"

#include "zonofit/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace zonofit {

const char* pairSideName(PairSide side) noexcept {
  return side == PairSide::PVertex ? "PVertex" : "ZVertex";
}

namespace {

Polytope polytopeOf(const Zonotope& Z, const std::vector<ZonotopeVertex>& verts) {
  Matrix V(static_cast<Index>(verts.size()), Z.dim());
  for (std::size_t k = 0; k < verts.size(); ++k) V.row(static_cast<Index>(k)) = verts[k].point.transpose();
  std::vector<Facet> facets;
  for (const auto& f : zonotopeFacets(Z)) facets.push_back(f.facet);
  return Polytope::fromVerticesAndFacets(V, std::move(facets));
}

void checkDims(const Polytope& P, const Zonotope& Z) {
  if (P.dim() != Z.dim())
    throw Error(ErrorCode::DimensionMismatch, "polytope and zonotope live in different dimensions");
}

double activeThreshold(double value, double tolActive) { return value - tolActive * value; }

bool samePair(const AchievingPair& a, const AchievingPair& b, double tol) {
  return (a.p - b.p).norm() <= tol && (a.q - b.q).norm() <= tol;
}

}  // namespace

ZonotopeGeometry::ZonotopeGeometry(const Zonotope& Z, int rankCap)
    : zonotope(Z),
      vertices(enumerateVertices(Z, rankCap)),
      polytope(polytopeOf(Z, vertices)) {}

DistanceResult hausdorffDistance(const Polytope& P, const Zonotope& Z, double tolActive) {
  checkDims(P, Z);
  return hausdorffDistance(P, ZonotopeGeometry(Z), tolActive);
}

DistanceResult hausdorffDistance(const Polytope& P, const ZonotopeGeometry& G, double tolActive) {
  const Zonotope& Z = G.zonotope;
  checkDims(P, Z);
  std::vector<ZonotopeProjection> fromP;
  std::vector<PolytopeProjection> fromZ;
  double value = 0.0;
  for (Index i = 0; i < P.vertexCount(); ++i) {
    fromP.push_back(projectPointToZonotope(Z, P.vertex(i)));
    value = std::max(value, fromP.back().distance);
  }
  for (const auto& v : G.vertices) {
    fromZ.push_back(projectPointToPolytope(P, v.point));
    value = std::max(value, fromZ.back().distance);
  }
  const double thr = activeThreshold(value, tolActive);
  const double dupTol = 1e-12 * std::max(P.scale(), 1.0);

  DistanceResult out;
  out.value = value;
  for (Index i = 0; i < P.vertexCount(); ++i) {
    const auto& pr = fromP[static_cast<std::size_t>(i)];
    if (pr.distance < thr) continue;
    AchievingPair pair;
    pair.p = P.vertex(i);
    pair.q = pr.point;
    pair.side = PairSide::PVertex;
    pair.vertexId = i;
    pair.lift = LiftPoint::fromCoords(pr.lift);
    pair.face = faceOfZonotope(Z, pair.lift);
    pair.distance = pr.distance;
    out.pairs.push_back(std::move(pair));
  }
  for (std::size_t k = 0; k < G.vertices.size(); ++k) {
    const auto& pr = fromZ[k];
    if (pr.distance < thr) continue;
    AchievingPair pair;
    pair.p = pr.point;
    pair.q = G.vertices[k].point;
    pair.side = PairSide::ZVertex;
    pair.vertexId = static_cast<Index>(k);
    pair.lift = LiftPoint::fromBits(G.vertices[k].bits);
    pair.distance = pr.distance;
    bool dup = false;
    for (const auto& other : out.pairs) dup = dup || samePair(other, pair, dupTol);
    if (dup) continue;
    pair.face = minimalFaceOfPolytope(P, pair.p);
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

DistanceResult coarseHausdorffDistance(const Polytope& P, const Zonotope& Z, double tolActive) {
  checkDims(P, Z);
  return coarseHausdorffDistance(P, ZonotopeGeometry(Z), tolActive);
}

DistanceResult coarseHausdorffDistance(const Polytope& P, const ZonotopeGeometry& G, double tolActive) {
  const Zonotope& Z = G.zonotope;
  checkDims(P, Z);
  const Index mp = P.vertexCount();
  const Index mz = static_cast<Index>(G.vertices.size());
  Matrix D(mp, mz);
  for (Index i = 0; i < mp; ++i)
    for (Index k = 0; k < mz; ++k) D(i, k) = (P.vertex(i) - G.vertices[static_cast<std::size_t>(k)].point).norm();
  const Vector rowMin = D.rowwise().minCoeff();
  const Vector colMin = D.colwise().minCoeff().transpose();
  const double value = std::max(rowMin.maxCoeff(), colMin.maxCoeff());
  const double thr = activeThreshold(value, tolActive);

  DistanceResult out;
  out.value = value;
  std::vector<std::pair<Index, Index>> seen;
  auto add = [&](Index i, Index k, PairSide side) {
    for (const auto& s : seen)
      if (s.first == i && s.second == k) return;
    seen.emplace_back(i, k);
    AchievingPair pair;
    pair.p = P.vertex(i);
    pair.q = G.vertices[static_cast<std::size_t>(k)].point;
    pair.side = side;
    pair.vertexId = side == PairSide::PVertex ? i : k;
    pair.lift = LiftPoint::fromBits(G.vertices[static_cast<std::size_t>(k)].bits);
    pair.distance = D(i, k);
    out.pairs.push_back(std::move(pair));
  };
  for (Index i = 0; i < mp; ++i) {
    if (rowMin(i) < thr) continue;
    const double tie = rowMin(i) + tolActive * value;
    for (Index k = 0; k < mz; ++k)
      if (D(i, k) <= tie) add(i, k, PairSide::PVertex);
  }
  for (Index k = 0; k < mz; ++k) {
    if (colMin(k) < thr) continue;
    const double tie = colMin(k) + tolActive * value;
    for (Index i = 0; i < mp; ++i)
      if (D(i, k) <= tie) add(i, k, PairSide::ZVertex);
  }
  return out;
}

bool isHausdorffStable(const Vector& x, const Polytope& P, double tolStrict) {
  const double scale = P.scale();
  if (P.maxViolation(x) < -tolStrict * scale) return true;
  const PolytopeProjection proj = projectPointToPolytope(P, x);
  if (proj.distance <= tolStrict * scale) return false;
  const Vector u = (x - proj.point) / proj.distance;

  std::vector<Index> active;
  const auto& facets = P.facets();
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const double slack = facets[k].offset - facets[k].normal.dot(proj.point);
    if (slack <= 1e-10 * scale) {
      active.push_back(static_cast<Index>(k));
    } else if (slack <= tolStrict * scale) {
      // Projection sits numerically on the boundary of its face.
      return false;
    }
  }
  if (active.empty()) return false;

  // max t s.t. sum_k alpha_k eta_k = u, alpha_k >= t.
  const Index K = static_cast<Index>(active.size());
  const Index d = P.dim();
  LinearProgram lp = LinearProgram::withVariables(K + 1);
  lp.direction = OptimizationDirection::Maximize;
  lp.objective(K) = 1.0;
  for (Index j = 0; j <= K; ++j) lp.lower(j) = -LinearProgram::kInf;
  for (Index j = 0; j < d; ++j) {
    Vector row = Vector::Zero(K + 1);
    for (Index k = 0; k < K; ++k) row(k) = facets[static_cast<std::size_t>(active[static_cast<std::size_t>(k)])].normal(j);
    lp.addConstraint(row, Sense::Equal, u(j));
  }
  for (Index k = 0; k < K; ++k) {
    Vector row = Vector::Zero(K + 1);
    row(k) = 1.0;
    row(K) = -1.0;
    lp.addConstraint(row, Sense::GreaterEqual, 0.0);
  }
  const LPSolution sol = solveLP(lp);
  if (sol.status == LPStatus::Infeasible) return false;
  if (sol.status == LPStatus::Unbounded) return true;
  return sol.value > tolStrict;
}

namespace {

bool liftIsUnique(const Zonotope& Z, const LiftPoint& lift) {
  const Index k = static_cast<Index>(lift.freeIndices.size());
  if (k == 0) return true;
  if (k >= Z.dim()) return false;
  Matrix GF(k, Z.dim());
  for (Index r = 0; r < k; ++r) GF.row(r) = Z.generators().row(lift.freeIndices[static_cast<std::size_t>(r)]);
  Eigen::FullPivLU<Matrix> lu(GF);
  lu.setThreshold(1e-10);
  return lu.rank() == k;
}

}  // namespace

LocalityReport checkLocality(const Polytope& P, const Zonotope& Z) {
  checkDims(P, Z);
  return checkLocality(P, ZonotopeGeometry(Z));
}

LocalityReport checkLocality(const Polytope& P, const ZonotopeGeometry& G) {
  const Zonotope& Z = G.zonotope;
  checkDims(P, Z);
  LocalityReport report;
  report.generalPosition = isGeneralPosition(Z);
  for (Index i = 0; i < P.vertexCount(); ++i) {
    const Vector p = P.vertex(i);
    if (!isHausdorffStable(p, G.polytope)) {
      report.hausdorffStableP.push_back(i);
      continue;
    }
    if (G.polytope.maxViolation(p) <= 0.0) continue;
    const ZonotopeProjection proj = projectPointToZonotope(Z, p);
    if (!liftIsUnique(Z, LiftPoint::fromCoords(proj.lift))) report.stableVertices.push_back(i);
  }
  for (std::size_t k = 0; k < G.vertices.size(); ++k) {
    if (!isHausdorffStable(G.vertices[k].point, P)) report.hausdorffStableZ.push_back(static_cast<Index>(k));
  }
  return report;
}

double distPointToAffine(const Vector& u, const AffineHull& hull) {
  if (hull.codim() == 0) return 0.0;
  const Vector r = hull.normals * u - hull.offsets;
  return (hull.normals.transpose() * r).norm();
}

double SmoothTerm::evaluate(const Zonotope& Z) const {
  if (anchor.size() != Z.rank())
    throw Error(ErrorCode::DimensionMismatch, "term rank differs from zonotope rank");
  const Vector base = Z.point(anchor);
  if (side == PairSide::ZVertex) return distPointToAffine(base, polytopeFace);
  const Vector r = p - base;
  if (freeGenerators.empty()) return r.norm();
  const Index k = static_cast<Index>(freeGenerators.size());
  Matrix GS(Z.dim(), k);
  for (Index c = 0; c < k; ++c) GS.col(c) = Z.generators().row(freeGenerators[static_cast<std::size_t>(c)]).transpose();
  const Vector coef = GS.completeOrthogonalDecomposition().solve(r);
  return (r - GS * coef).norm();
}

SmoothTerm termFromPair(const AchievingPair& pair) {
  SmoothTerm t;
  t.side = pair.side;
  t.vertexId = pair.vertexId;
  t.anchor = pair.lift.anchor();
  if (pair.side == PairSide::PVertex) {
    t.p = pair.p;
    t.freeGenerators = pair.lift.freeIndices;
  } else {
    t.polytopeFace = pair.face.hull;
  }
  return t;
}

std::vector<SmoothTerm> localTerms(const Polytope& P, const Zonotope& Z0) {
  checkDims(P, Z0);
  const ZonotopeGeometry G(Z0);
  if (!checkLocality(P, G).ok())
    throw Error(ErrorCode::LocalityViolation, "locality conditions fail at the given zonotope");
  std::vector<SmoothTerm> terms;
  for (Index i = 0; i < P.vertexCount(); ++i) {
    const ZonotopeProjection proj = projectPointToZonotope(Z0, P.vertex(i));
    SmoothTerm t;
    t.side = PairSide::PVertex;
    t.vertexId = i;
    t.p = P.vertex(i);
    const LiftPoint lift = LiftPoint::fromCoords(proj.lift);
    t.anchor = lift.anchor();
    t.freeGenerators = lift.freeIndices;
    terms.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < G.vertices.size(); ++k) {
    const PolytopeProjection proj = projectPointToPolytope(P, G.vertices[k].point);
    SmoothTerm t;
    t.side = PairSide::ZVertex;
    t.vertexId = static_cast<Index>(k);
    t.anchor = G.vertices[k].bits;
    t.polytopeFace = minimalFaceOfPolytope(P, proj.point).hull;
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace zonofit

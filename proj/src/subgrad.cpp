#include "zonofit/subgrad.hpp"

#include <cmath>

namespace zonofit {

ParamVector toParams(const Zonotope& Z) {
  const Index n = Z.rank();
  const Index d = Z.dim();
  ParamVector x(n * d + d);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < d; ++j) x(paramIndex(i, j, d)) = Z.generators()(i, j);
  x.tail(d) = Z.translation();
  return x;
}

Zonotope fromParams(const ParamVector& x, Index n, Index d) {
  if (x.size() != n * d + d) throw Error(ErrorCode::DimensionMismatch, "parameter vector has wrong length");
  Matrix G(n, d);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < d; ++j) G(i, j) = x(paramIndex(i, j, d));
  return Zonotope(G, x.tail(d));
}

const char* objectiveName(Objective obj) noexcept {
  return obj == Objective::Exact ? "exact" : "coarse";
}

namespace {

// (dir) (x) (e, 1) in parameter layout.
ParamVector outer(const Vector& dir, const Vector& e) {
  const Index n = e.size();
  const Index d = dir.size();
  ParamVector g(n * d + d);
  for (Index i = 0; i < n; ++i) g.segment(i * d, d) = e(i) * dir;
  g.tail(d) = dir;
  return g;
}

Matrix freeRows(const Zonotope& Z, const std::vector<Index>& idx) {
  Matrix GS(static_cast<Index>(idx.size()), Z.dim());
  for (std::size_t r = 0; r < idx.size(); ++r) GS.row(static_cast<Index>(r)) = Z.generators().row(idx[r]);
  return GS;
}

}  // namespace

ParamVector gradDeltaQ(const SmoothTerm& term, const Zonotope& Z) {
  if (term.side != PairSide::ZVertex) throw Error(ErrorCode::InvalidArgument, "gradDeltaQ needs a ZVertex term");
  const AffineHull& hull = term.polytopeFace;
  if (hull.codim() == 0) throw Error(ErrorCode::DegenerateFace, "face of P is full-dimensional");
  const Vector u = Z.point(term.anchor);
  const Vector w = hull.normals.transpose() * (hull.normals * u - hull.offsets);
  const double nrm = w.norm();
  const Vector dir = nrm > 0.0 ? Vector(w / nrm) : Vector::Zero(Z.dim());
  return outer(dir, term.anchor.toVector());
}

Vector facetNormal(const Zonotope& Z, const std::vector<Index>& freeIndices, const Vector& p,
                   const Vector& v) {
  if (static_cast<Index>(freeIndices.size()) != Z.dim() - 1)
    throw Error(ErrorCode::InvalidArgument, "a facet needs exactly d-1 free generators");
  const Matrix GS = freeRows(Z, freeIndices);
  const Vector eta = minorNormal(GS);
  double prod = 1.0;
  for (Index r = 0; r < GS.rows(); ++r) prod *= GS.row(r).norm();
  const double gamma = eta.norm();
  if (!(gamma > kGeneralPositionTol * prod) || gamma == 0.0)
    throw Error(ErrorCode::SingularSubmatrix, "free generators are linearly dependent");
  const double sigma = eta.dot(p - v) < 0.0 ? -1.0 : 1.0;
  return sigma * eta / gamma;
}

ParamVector gradDeltaP(const SmoothTerm& term, const Zonotope& Z, FaceAnchor anchor) {
  if (term.side != PairSide::PVertex) throw Error(ErrorCode::InvalidArgument, "gradDeltaP needs a PVertex term");
  const Index n = Z.rank();
  const Index d = Z.dim();
  const auto& freeIdx = term.freeGenerators;
  const Index k = static_cast<Index>(freeIdx.size());
  if (k >= d) throw Error(ErrorCode::DegenerateFace, "face of Z is full-dimensional");

  Vector a = term.anchor.toVector();
  if (anchor == FaceAnchor::High)
    for (Index i : freeIdx) a(i) = 1.0;
  const Vector v = Z.point(a);
  ParamVector grad = ParamVector::Zero(n * d + d);

  if (k == d - 1) {
    const Matrix GS = freeRows(Z, freeIdx);
    const Vector eta = facetNormal(Z, freeIdx, term.p, v);
    const Vector raw = minorNormal(GS);
    const double gamma = raw.norm();
    const double sigma = raw.dot(eta) < 0.0 ? -1.0 : 1.0;
    const Vector r = term.p - v;
    for (Index i = 0; i < n; ++i) grad.segment(i * d, d) = -a(i) * eta;
    for (Index s = 0; s < k; ++s) {
      const Index i = freeIdx[static_cast<std::size_t>(s)];
      for (Index j = 0; j < d; ++j) {
        Matrix M = GS;
        M.row(s).setZero();
        M(s, j) = 1.0;
        const Vector dRaw = minorNormal(M);
        const Vector dEta = sigma * (dRaw / gamma - raw * (raw.dot(dRaw) / (gamma * gamma * gamma)));
        grad(paramIndex(i, j, d)) += dEta.dot(r);
      }
    }
    grad.tail(d) = -eta;
    return grad;
  }

  // Lower-dimensional face: distance from p to v + span(G_S).
  const Vector r = term.p - v;
  Vector coef = Vector::Zero(0);
  Vector w = r;
  if (k > 0) {
    const Matrix GS = freeRows(Z, freeIdx).transpose();
    coef = GS.completeOrthogonalDecomposition().solve(r);
    w = r - GS * coef;
  }
  const double nrm = w.norm();
  if (nrm == 0.0) return grad;
  const Vector nv = w / nrm;
  Vector weight = a;
  for (Index s = 0; s < k; ++s) weight(freeIdx[static_cast<std::size_t>(s)]) += coef(s);
  for (Index i = 0; i < n; ++i) grad.segment(i * d, d) = -weight(i) * nv;
  grad.tail(d) = -nv;
  return grad;
}

ParamVector gradCoarsePair(const AchievingPair& pair, const Zonotope& Z) {
  const Vector e = pair.lift.coords;
  const Vector diff = Z.point(e) - pair.p;
  const double nrm = diff.norm();
  const Vector dir = nrm > 0.0 ? Vector(diff / nrm) : Vector::Zero(Z.dim());
  return outer(dir, e);
}

ParamVector termGradient(const SmoothTerm& term, const Zonotope& Z) {
  return term.side == PairSide::ZVertex ? gradDeltaQ(term, Z) : gradDeltaP(term, Z);
}

SubdifferentialSet clarkeSubdifferential(const Polytope& P, const Zonotope& Z, double tolActive,
                                         Objective objective) {
  return clarkeSubdifferential(P, ZonotopeGeometry(Z), tolActive, objective);
}

SubdifferentialSet clarkeSubdifferential(const Polytope& P, const ZonotopeGeometry& G, double tolActive,
                                         Objective objective) {
  const Zonotope& Z = G.zonotope;
  SubdifferentialSet out;
  if (objective == Objective::Coarse) {
    if (!isGeneralPosition(Z))
      throw Error(ErrorCode::LocalityViolation, "zonotope is not in general position");
    DistanceResult dist = coarseHausdorffDistance(P, G, tolActive);
    out.value = dist.value;
    out.activePairs = std::move(dist.pairs);
    if (out.value > 0.0)
      for (const auto& pair : out.activePairs) out.gradients.push_back(gradCoarsePair(pair, Z));
    return out;
  }
  if (!checkLocality(P, G).ok())
    throw Error(ErrorCode::LocalityViolation, "locality conditions fail at the given zonotope");
  DistanceResult dist = hausdorffDistance(P, G, tolActive);
  out.value = dist.value;
  out.activePairs = std::move(dist.pairs);
  if (out.value > 0.0)
    for (const auto& pair : out.activePairs) out.gradients.push_back(termGradient(termFromPair(pair), Z));
  return out;
}

ParamVector finiteDifferenceGradient(const SmoothTerm& term, const Zonotope& Z, double h) {
  const Index n = Z.rank();
  const Index d = Z.dim();
  const ParamVector x = toParams(Z);
  ParamVector g(x.size());
  for (Index k = 0; k < x.size(); ++k) {
    ParamVector xp = x;
    ParamVector xm = x;
    xp(k) += h;
    xm(k) -= h;
    g(k) = (term.evaluate(fromParams(xp, n, d)) - term.evaluate(fromParams(xm, n, d))) / (2.0 * h);
  }
  return g;
}

}  // namespace zonofit

#include "zonofit/cone.hpp"

#include "zonofit/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace zonofit {

const char* directionStatusName(DirectionStatus s) noexcept {
  switch (s) {
    case DirectionStatus::Descent: return "Descent";
    case DirectionStatus::FeasibleEmpty: return "FeasibleEmpty";
    case DirectionStatus::ConeEmptyInterior: return "ConeEmptyInterior";
  }
  return "Unknown";
}

const char* certificateName(Certificate c) noexcept {
  switch (c) {
    case Certificate::None: return "None";
    case Certificate::CertifiedLocalMin: return "CertifiedLocalMin";
    case Certificate::CertifiedLocalMinOfCoarse: return "CertifiedLocalMinOfCoarse";
    case Certificate::Heuristic: return "Heuristic";
  }
  return "Unknown";
}

FeasibilityCone buildCone(const std::vector<AchievingPair>& pairs, Index n, Index d) {
  FeasibilityCone cone;
  cone.pairs = pairs;
  cone.rows = Matrix::Zero(static_cast<Index>(pairs.size()), n * d + d);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& pr = pairs[k];
    if (pr.lift.coords.size() != n || pr.p.size() != d)
      throw Error(ErrorCode::DimensionMismatch, "pair does not match the zonotope shape");
    const Vector diff = pr.p - pr.q;
    const Index row = static_cast<Index>(k);
    for (Index i = 0; i < n; ++i) cone.rows.block(row, i * d, 1, d) = pr.lift.coords(i) * diff.transpose();
    cone.rows.block(row, n * d, 1, d) = diff.transpose();
  }
  return cone;
}

Vector displacement(const ParamVector& direction, const Vector& lift, Index d) {
  const Index n = lift.size();
  Vector delta = direction.tail(d);
  for (Index i = 0; i < n; ++i) delta += lift(i) * direction.segment(i * d, d);
  return delta;
}

std::vector<double> tauLimits(const std::vector<AchievingPair>& pairs, const ParamVector& direction,
                              Index n, Index d) {
  if (direction.size() != n * d + d)
    throw Error(ErrorCode::DimensionMismatch, "direction has wrong length");
  std::vector<double> taus;
  for (const auto& pr : pairs) {
    const Vector delta = displacement(direction, pr.lift.coords, d);
    const double num = delta.dot(pr.p - pr.q);
    const double den = delta.squaredNorm();
    if (!(num > 0.0) || !(den > 0.0))
      throw Error(ErrorCode::NonImprovingRow, "direction does not improve an achieving pair");
    taus.push_back(2.0 * num / den);
  }
  return taus;
}

namespace {

bool strictlyInside(const Matrix& A, const Vector& x) {
  const double xn = x.norm();
  if (!(xn > 0.0)) return false;
  for (Index i = 0; i < A.rows(); ++i) {
    const double rn = A.row(i).norm();
    if (rn == 0.0) continue;
    if (!(A.row(i).dot(x) > 1e-12 * rn * xn)) return false;
  }
  return true;
}

bool allQAreVertices(const std::vector<AchievingPair>& pairs) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const AchievingPair& p) { return p.lift.freeIndices.empty(); });
}

// Candidate direction from the negated Clarke set; empty vector when the
// feasible set is empty.
Vector feasibleCenter(const std::vector<ParamVector>& gradients, const Matrix& A, double* radius) {
  std::vector<Vector> pts;
  for (const auto& g : gradients) {
    const Vector y = -g;
    bool dup = false;
    for (const auto& q : pts) dup = dup || (q - y).norm() <= 1e-14 * std::max(1.0, y.norm());
    if (!dup) pts.push_back(y);
  }
  *radius = 0.0;
  const Vector c0 = pts.front();
  if (pts.size() == 1) return strictlyInside(A, c0) ? c0 : Vector();

  const Index N = c0.size();
  Matrix D(static_cast<Index>(pts.size()) - 1, N);
  for (std::size_t k = 1; k < pts.size(); ++k) D.row(static_cast<Index>(k) - 1) = (pts[k] - c0).transpose();
  Eigen::JacobiSVD<Matrix> svd(D, Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  Index r = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(sv(0), 1e-300)) ++r;
  if (r == 0) return strictlyInside(A, c0) ? c0 : Vector();
  const Matrix B = svd.matrixV().leftCols(r);

  Matrix Zpts(static_cast<Index>(pts.size()), r);
  for (std::size_t k = 0; k < pts.size(); ++k) Zpts.row(static_cast<Index>(k)) = (B.transpose() * (pts[k] - c0)).transpose();
  const Polytope hull = Polytope::fromPoints(Zpts);

  std::vector<Halfspace> hs;
  for (const auto& f : hull.facets()) hs.push_back({f.normal, f.offset});
  const Matrix AB = A * B;
  const Vector Ac = A * c0;
  for (Index i = 0; i < A.rows(); ++i) {
    const double an = A.row(i).norm();
    if (AB.row(i).norm() <= 1e-14 * std::max(an, 1e-300)) {
      if (!(Ac(i) > 0.0)) return Vector();
      continue;
    }
    hs.push_back({-AB.row(i).transpose(), Ac(i)});
  }
  ChebyshevBall ball;
  try {
    ball = chebyshevCenter(hs, r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfeasibleRegion) return Vector();
    throw;
  }
  *radius = ball.radius;
  const Vector dir = c0 + B * ball.center;
  return strictlyInside(A, dir) ? dir : Vector();
}

}  // namespace

DirectionResult descentDirection(const SubdifferentialSet& subdiff, const FeasibilityCone& cone,
                                 const DirectionOptions& options) {
  DirectionResult out;
  const ConeInterior interior = coneInteriorPoint(cone.rows, options.interiorThreshold);
  out.coneMargin = interior.margin;
  if (!interior.interior) {
    out.status = DirectionStatus::ConeEmptyInterior;
    if (options.objective == Objective::Coarse) out.certificate = Certificate::CertifiedLocalMinOfCoarse;
    else if (allQAreVertices(cone.pairs)) out.certificate = Certificate::CertifiedLocalMin;
    else out.certificate = Certificate::Heuristic;
    return out;
  }
  Vector dir;
  if (!subdiff.gradients.empty()) dir = feasibleCenter(subdiff.gradients, cone.rows, &out.radius);
  if (dir.size() == 0) {
    if (!options.coneFallback) {
      out.status = DirectionStatus::FeasibleEmpty;
      out.certificate = Certificate::Heuristic;
      return out;
    }
    dir = interior.point;
    out.fallbackUsed = true;
  }
  const Index N = dir.size();
  const Index d = cone.pairs.empty() ? 0 : cone.pairs.front().p.size();
  const Index n = d > 0 ? N / d - 1 : 0;
  out.status = DirectionStatus::Descent;
  out.direction = dir;
  out.taus = tauLimits(cone.pairs, dir, n, d);
  return out;
}

}  // namespace zonofit

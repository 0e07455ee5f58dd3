#include "zonofit/warmstart.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zonofit {

namespace {

void requirePlanar(const Polytope& P) {
  if (P.dim() != 2) throw Error(ErrorCode::DimensionNot2, "planar warmstart needs a polygon");
}

double envelopeArea(const Polytope& P, const Vector& O) {
  return polygonArea(envelope2D(P, O).vertices);
}

Vector randomDirection(Index d, Rng& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Vector v(d);
  do {
    for (Index j = 0; j < d; ++j) v(j) = N(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Zonotope ensureGeneralPosition(Zonotope Z, double scale, Rng& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int t = 0; t < 100 && !isGeneralPosition(Z); ++t) {
    Matrix G = Z.generators();
    for (Index k = 0; k < G.size(); ++k) G(k) += 1e-6 * scale * U(rng);
    Z = Zonotope(G, Z.translation());
  }
  return Z;
}

Zonotope centredOn(const Matrix& G, const Vector& center) {
  return Zonotope(G, center - 0.5 * G.colwise().sum().transpose());
}

}  // namespace

SymmetricPolygon envelope2D(const Polytope& P, const Vector& O) {
  requirePlanar(P);
  const Matrix& V = P.vertices();
  Matrix pts(2 * V.rows(), 2);
  pts.topRows(V.rows()) = V;
  pts.bottomRows(V.rows()) = (-V).rowwise() + 2.0 * O.transpose();
  return {convexHull2D(pts), O};
}

Vector chooseCenter2D(const Polytope& P, int gridDepth) {
  requirePlanar(P);
  Vector best = P.barycenter();
  double bestArea = envelopeArea(P, best);
  double half = 0.25 * P.diameter();
  for (int level = 0; level < gridDepth; ++level) {
    const Vector anchor = best;
    const double spacing = half / 4.0;
    for (int a = -4; a <= 4; ++a) {
      for (int b = -4; b <= 4; ++b) {
        Vector O = anchor;
        O(0) += a * spacing;
        O(1) += b * spacing;
        const double area = envelopeArea(P, O);
        if (area < bestArea) {
          bestArea = area;
          best = O;
        }
      }
    }
    half = spacing;
  }
  return best;
}

Zonotope symmetricPolygonToZonotope(const SymmetricPolygon& S, double tol) {
  const Index m = S.vertices.rows();
  if (S.vertices.cols() != 2) throw Error(ErrorCode::DimensionNot2, "symmetric polygon must be planar");
  if (m < 4 || m % 2 != 0)
    throw Error(ErrorCode::AsymmetryTooLarge, "a centrally symmetric polygon has an even number of vertices");
  double scale = 0.0;
  for (Index i = 0; i < m; ++i) scale = std::max(scale, (S.vertices.row(i).transpose() - S.center).norm());
  const Index h = m / 2;
  for (Index i = 0; i < h; ++i) {
    const Vector mid = 0.5 * (S.vertices.row(i) + S.vertices.row(i + h)).transpose();
    if ((mid - S.center).norm() > tol * std::max(scale, 1.0))
      throw Error(ErrorCode::AsymmetryTooLarge, "polygon is not centrally symmetric about its centre");
  }
  Matrix G(h, 2);
  for (Index i = 0; i < h; ++i) G.row(i) = S.vertices.row(i + 1) - S.vertices.row(i);
  const Zonotope Z(G, S.vertices.row(0).transpose());
  const auto verts = enumerateVertices(Z);
  if (static_cast<Index>(verts.size()) != m)
    throw Error(ErrorCode::AsymmetryTooLarge, "edge vectors do not rebuild the polygon");
  for (const auto& v : verts) {
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < m; ++i) best = std::min(best, (S.vertices.row(i).transpose() - v.point).norm());
    if (best > tol * std::max(scale, 1.0))
      throw Error(ErrorCode::AsymmetryTooLarge, "edge vectors do not rebuild the polygon");
  }
  return Z;
}

Zonotope warmstart2D(const Polytope& P, Index n, Rng& rng, int gridDepth) {
  requirePlanar(P);
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "rank must be at least the dimension");
  const Vector O = chooseCenter2D(P, gridDepth);
  const Zonotope full = symmetricPolygonToZonotope(envelope2D(P, O));
  const Vector center = full.center();
  const Matrix& G = full.generators();
  Matrix out(n, 2);
  if (G.rows() >= n) {
    std::vector<Index> order(static_cast<std::size_t>(G.rows()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return G.row(a).norm() > G.row(b).norm(); });
    for (Index k = 0; k < n; ++k) out.row(k) = G.row(order[static_cast<std::size_t>(k)]);
  } else {
    // short enough to stay close to a symmetric P, long enough for the geometry tolerances
    const double pad = 1e-5 * P.diameter();
    out.topRows(G.rows()) = G;
    for (Index k = G.rows(); k < n; ++k) out.row(k) = pad * randomDirection(2, rng).transpose();
  }
  return canonicalize(ensureGeneralPosition(centredOn(out, center), P.diameter(), rng));
}

Zonotope warmstartGeneric(const Polytope& P, Index n, Rng& rng) {
  const Index d = P.dim();
  if (n < d) throw Error(ErrorCode::InvalidArgument, "rank must be at least the dimension");
  const Vector bary = P.barycenter();
  const Matrix centered = P.vertices().rowwise() - bary.transpose();
  const Matrix cov = centered.transpose() * centered / static_cast<double>(P.vertexCount());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(cov);
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::DegenerateInput, "vertex covariance is not decomposable");
  Matrix G(n, d);
  double spread = 0.0;
  for (Index k = 0; k < d; ++k) {
    const Vector axis = eig.eigenvectors().col(d - 1 - k);
    // twice the standard deviation equals the side length for a box
    const double extent = 2.0 * std::sqrt(std::max(eig.eigenvalues()(d - 1 - k), 0.0));
    if (!(extent > 0.0)) throw Error(ErrorCode::DegenerateInput, "polytope has zero extent along an axis");
    G.row(k) = extent * axis.transpose();
    spread = std::max(spread, extent);
  }
  for (Index k = d; k < n; ++k) G.row(k) = 0.1 * spread * randomDirection(d, rng).transpose();
  return canonicalize(ensureGeneralPosition(centredOn(G, bary), spread, rng));
}

Zonotope warmstart(const Polytope& P, Index n, Rng& rng) {
  return P.dim() == 2 ? warmstart2D(P, n, rng) : warmstartGeneric(P, n, rng);
}

Zonotope randomStart(const Polytope& P, Index n, Rng& rng) {
  const Index d = P.dim();
  if (n < d) throw Error(ErrorCode::InvalidArgument, "rank must be at least the dimension");
  std::uniform_real_distribution<double> len(0.2, 1.0);
  const double diam = P.diameter();
  Matrix G(n, d);
  for (Index k = 0; k < n; ++k) G.row(k) = len(rng) * diam / std::sqrt(static_cast<double>(n)) * randomDirection(d, rng).transpose();
  return canonicalize(ensureGeneralPosition(centredOn(G, P.barycenter()), diam, rng));
}

}  // namespace zonofit

#ifndef ZONOFIT_TESTS_FIXTURES_HPP_
#define ZONOFIT_TESTS_FIXTURES_HPP_

#include "zonofit/io.hpp"
#include "zonofit/warmstart.hpp"

#include <cmath>
#include <optional>
#include <random>

namespace fixtures {

using zonofit::Index;
using zonofit::Matrix;
using zonofit::Vector;

inline zonofit::Zonotope unitSquare() { return zonofit::Zonotope(Matrix::Identity(2, 2), Vector::Zero(2)); }

/// Unit square rotated a quarter turn and scaled by (1 + eps) about its centre.
inline zonofit::Polytope rotatedSquare(double eps = 0.05) {
  const double h = 0.5 * std::sqrt(2.0) * (1.0 + eps);
  Matrix V(4, 2);
  V << 0.5 - h, 0.5, 0.5, 0.5 - h, 0.5 + h, 0.5, 0.5, 0.5 + h;
  return zonofit::Polytope::fromPoints(V);
}

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline double pointSegmentDistance(const Vector& x, const Vector& a, const Vector& b) {
  const Vector ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp((x - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (x - (a + t * ab)).norm();
}

/// Distance from x to a convex polygon given by its ccw cycle.
inline double pointPolygonDistance(const Vector& x, const Matrix& poly) {
  const Index m = poly.rows();
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < m; ++i) {
    const Vector a = poly.row(i).transpose();
    const Vector b = poly.row((i + 1) % m).transpose();
    const double cross = (b(0) - a(0)) * (x(1) - a(1)) - (b(1) - a(1)) * (x(0) - a(0));
    if (cross < 0.0) inside = false;
    best = std::min(best, pointSegmentDistance(x, a, b));
  }
  return inside ? 0.0 : best;
}

inline Matrix zonotopePolygon(const zonofit::Zonotope& Z) {
  const auto verts = zonofit::enumerateVertices(Z);
  Matrix pts(static_cast<Index>(verts.size()), 2);
  for (std::size_t k = 0; k < verts.size(); ++k) pts.row(static_cast<Index>(k)) = verts[k].point.transpose();
  return zonofit::convexHull2D(pts);
}

/// Planar Hausdorff distance from edge geometry only.
inline double planarHausdorff(const Matrix& A, const Matrix& B) {
  double d = 0.0;
  for (Index i = 0; i < A.rows(); ++i) d = std::max(d, pointPolygonDistance(A.row(i).transpose(), B));
  for (Index i = 0; i < B.rows(); ++i) d = std::max(d, pointPolygonDistance(B.row(i).transpose(), A));
  return d;
}

/// Centrally symmetric polygon with 2n edges as a zonotope with sorted-angle generators.
inline zonofit::Zonotope randomSymmetricZonotope(zonofit::Rng& rng, Index n) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  Matrix G(n, 2);
  for (Index i = 0; i < n; ++i) {
    const double angle = M_PI * (i + 0.2 + 0.6 * U(rng)) / static_cast<double>(n);
    const double len = 0.5 + U(rng);
    G(i, 0) = len * std::cos(angle);
    G(i, 1) = len * std::sin(angle);
  }
  Vector mu(2);
  mu << U(rng) - 0.5, U(rng) - 0.5;
  return zonofit::canonicalize(zonofit::Zonotope(G, mu));
}

/// Coarse local minimum: every vertex v of Z is the midpoint of two vertices
/// v +- delta t_v of P, with t_v a unit vector orthogonal to the mean facet
/// normal at v. Empty when those points are not in convex position.
inline std::optional<zonofit::Polytope> coarseMinimumAround(const zonofit::Zonotope& Z, double delta,
                                                            zonofit::Rng& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  const auto verts = zonofit::enumerateVertices(Z);
  const auto facets = zonofit::zonotopeFacets(Z);
  const Index d = Z.dim();
  Matrix pts(2 * static_cast<Index>(verts.size()), d);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    Vector out = Vector::Zero(d);
    for (const auto& f : facets)
      if (std::abs(f.facet.normal.dot(verts[k].point) - f.facet.offset) < 1e-9) out += f.facet.normal;
    out.normalize();
    Vector t(d);
    for (Index j = 0; j < d; ++j) t(j) = N(rng);
    t -= t.dot(out) * out;
    t.normalize();
    pts.row(2 * static_cast<Index>(k)) = (verts[k].point + delta * t).transpose();
    pts.row(2 * static_cast<Index>(k) + 1) = (verts[k].point - delta * t).transpose();
  }
  zonofit::Polytope P = zonofit::Polytope::fromPoints(pts);
  if (P.vertexCount() != pts.rows()) return std::nullopt;
  return P;
}

inline zonofit::Polytope asPolytope(const zonofit::Zonotope& Z) { return zonofit::asPolytope(Z); }

}  // namespace fixtures

#endif  // ZONOFIT_TESTS_FIXTURES_HPP_

#include "zonofit/geom.hpp"

#include "zonofit/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace zonofit {

const char* errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::RankCapExceeded: return "RankCapExceeded";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::LPNumericalFailure: return "LPNumericalFailure";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::NonUniqueLift: return "NonUniqueLift";
    case ErrorCode::PointOutsidePolytope: return "PointOutsidePolytope";
    case ErrorCode::CodimZeroFace: return "CodimZeroFace";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::SingularSubmatrix: return "SingularSubmatrix";
    case ErrorCode::LocalityViolation: return "LocalityViolation";
    case ErrorCode::NonImprovingRow: return "NonImprovingRow";
    case ErrorCode::EmptyTaus: return "EmptyTaus";
    case ErrorCode::PerturbationBudgetExceeded: return "PerturbationBudgetExceeded";
    case ErrorCode::InfeasibleRegion: return "InfeasibleRegion";
    case ErrorCode::UnboundedRegion: return "UnboundedRegion";
    case ErrorCode::DimensionNot2: return "DimensionNot2";
    case ErrorCode::AsymmetryTooLarge: return "AsymmetryTooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// ---------------------------------------------------------------------------

BitVector BitVector::fromMask(std::uint64_t mask, Index n) {
  BitVector b(n);
  for (Index i = 0; i < n; ++i) b.set(i, ((mask >> i) & 1u) != 0);
  return b;
}

Vector BitVector::toVector() const {
  Vector v(size());
  for (Index i = 0; i < size(); ++i) v(i) = (*this)[i] ? 1.0 : 0.0;
  return v;
}

std::uint64_t BitVector::mask() const {
  std::uint64_t m = 0;
  for (Index i = 0; i < size(); ++i)
    if ((*this)[i]) m |= (std::uint64_t{1} << i);
  return m;
}

Zonotope::Zonotope(Matrix generators, Vector translation)
    : generators_(std::move(generators)), translation_(std::move(translation)) {
  if (generators_.cols() < 1)
    throw Error(ErrorCode::InvalidArgument, "zonotope dimension must be at least 1");
  if (generators_.rows() < generators_.cols())
    throw Error(ErrorCode::InvalidArgument, "zonotope rank must be at least its dimension");
  if (translation_.size() != generators_.cols())
    throw Error(ErrorCode::DimensionMismatch, "translation length differs from generator length");
  if (!generators_.allFinite() || !translation_.allFinite())
    throw Error(ErrorCode::InvalidArgument, "zonotope parameters must be finite");
}

Vector Zonotope::point(const Vector& lift) const {
  if (lift.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "lift length differs from rank");
  return generators_.transpose() * lift + translation_;
}

Vector Zonotope::point(const BitVector& bits) const { return point(bits.toVector()); }

Vector Zonotope::center() const {
  return translation_ + 0.5 * generators_.colwise().sum().transpose();
}

// ---------------------------------------------------------------------------

Vector minorNormal(const Matrix& rows) {
  const Index d = rows.cols();
  const Index k = rows.rows();
  if (k != d - 1) throw Error(ErrorCode::DimensionMismatch, "minorNormal needs d-1 rows");
  Vector eta(d);
  if (k == 0) {
    eta(0) = -1.0;
    return eta;
  }
  Matrix sub(k, k);
  for (Index j = 0; j < d; ++j) {
    Index c = 0;
    for (Index col = 0; col < d; ++col) {
      if (col == j) continue;
      sub.col(c++) = rows.col(col);
    }
    const double sign = ((j + 1) % 2 == 0) ? 1.0 : -1.0;
    eta(j) = sign * sub.determinant();
  }
  return eta;
}

Matrix orthogonalComplement(const Matrix& D, Index dim, double tol) {
  if (D.rows() == 0) return Matrix::Identity(dim, dim);
  Eigen::JacobiSVD<Matrix> svd(D, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(top, 1e-300)) ++rank;
  if (top == 0.0) rank = 0;
  return svd.matrixV().rightCols(dim - rank).transpose();
}

namespace {

double pointScale(const Matrix& pts) {
  if (pts.rows() == 0) return 1.0;
  const Vector c = pts.colwise().mean().transpose();
  double s = 0.0;
  for (Index i = 0; i < pts.rows(); ++i) s = std::max(s, (pts.row(i).transpose() - c).norm());
  return std::max(s, 1e-300);
}

std::vector<Facet> bruteForceFacets(const Matrix& V, double tol) {
  const Index m = V.rows();
  const Index d = V.cols();
  std::vector<Facet> facets;
  forEachSubset(static_cast<int>(m), static_cast<int>(d), [&](const std::vector<int>& sub) {
    Matrix D(d - 1, d);
    const Vector v0 = V.row(sub[0]).transpose();
    for (Index r = 1; r < d; ++r) D.row(r - 1) = V.row(sub[static_cast<std::size_t>(r)]) - v0.transpose();
    Vector eta = minorNormal(D);
    const double nrm = eta.norm();
    if (!(nrm > 1e-12)) return;
    eta /= nrm;
    // Reject nearly dependent subsets whose normal is numerically unreliable.
    const Matrix Dn = D / std::max(D.norm(), 1e-300);
    if (minorNormal(Dn).norm() < 1e-10) return;
    double c = eta.dot(v0);
    const Vector s = V * eta - Vector::Constant(m, c);
    const bool below = (s.array() <= tol).all();
    const bool above = (s.array() >= -tol).all();
    if (!below && !above) return;
    if (!below) {
      eta = -eta;
      c = -c;
    }
    for (const Facet& f : facets) {
      if ((f.normal - eta).norm() < 1e-7 && std::abs(f.offset - c) < 1e3 * tol) return;
    }
    facets.push_back({eta, c});
  });
  return facets;
}

}  // namespace

Polytope::Polytope(Matrix vertices, std::vector<Facet> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  scale_ = pointScale(vertices_);
}

Polytope Polytope::fromPoints(const Matrix& points) {
  const Index d = points.cols();
  if (d < 1 || points.rows() == 0)
    throw Error(ErrorCode::DegenerateInput, "polytope needs at least one point in R^d, d >= 1");
  if (!points.allFinite()) throw Error(ErrorCode::InvalidArgument, "polytope points must be finite");
  const double scale = pointScale(points);
  const double tol = 1e-9 * scale;

  // Affine dimension.
  const Vector c = points.colwise().mean().transpose();
  const Matrix centered = points.rowwise() - c.transpose();
  Eigen::JacobiSVD<Matrix> svd(centered);
  const Vector& sv = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(sv(0), 1e-300)) ++rank;
  if (sv.size() == 0 || sv(0) <= 0.0 || rank < d) {
    std::ostringstream os;
    os << "polytope is not full-dimensional (affine rank " << rank << " in R^" << d << ")";
    throw Error(ErrorCode::DegenerateInput, os.str());
  }

  // Drop duplicates, then points inside the hull of the rest.
  std::vector<Index> keep;
  for (Index i = 0; i < points.rows(); ++i) {
    bool dup = false;
    for (Index j : keep) dup = dup || (points.row(i) - points.row(j)).norm() <= tol;
    if (!dup) keep.push_back(i);
  }
  for (std::size_t k = 0; k < keep.size();) {
    if (keep.size() <= static_cast<std::size_t>(d + 1)) break;
    Matrix others(static_cast<Index>(keep.size()) - 1, d);
    Index r = 0;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (j != k) others.row(r++) = points.row(keep[j]);
    const Matrix shifted = others.rowwise() - points.row(keep[k]);
    const QPResult qp = solveMinNormPoint(shifted);
    const double dist = (shifted.transpose() * qp.minimizer).norm();
    if (dist <= tol) {
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  Matrix V(static_cast<Index>(keep.size()), d);
  for (std::size_t k = 0; k < keep.size(); ++k) V.row(static_cast<Index>(k)) = points.row(keep[k]);
  std::vector<Facet> facets = bruteForceFacets(V, tol);
  if (facets.size() < static_cast<std::size_t>(d + 1))
    throw Error(ErrorCode::DegenerateInput, "could not derive a closed facet description");
  return Polytope(std::move(V), std::move(facets));
}

Polytope Polytope::fromVerticesAndFacets(const Matrix& vertices, std::vector<Facet> facets) {
  if (vertices.rows() == 0 || vertices.cols() < 1)
    throw Error(ErrorCode::DegenerateInput, "polytope needs vertices");
  const double tol = 1e-7 * pointScale(vertices);
  for (Facet& f : facets) {
    if (f.normal.size() != vertices.cols())
      throw Error(ErrorCode::DimensionMismatch, "facet normal has wrong dimension");
    const double n = f.normal.norm();
    if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, "facet normal is zero");
    f.normal /= n;
    f.offset /= n;
    for (Index i = 0; i < vertices.rows(); ++i) {
      if (f.normal.dot(vertices.row(i).transpose()) > f.offset + tol)
        throw Error(ErrorCode::InvalidArgument, "vertex violates a supplied facet");
    }
  }
  return Polytope(vertices, std::move(facets));
}

Vector Polytope::barycenter() const { return vertices_.colwise().mean().transpose(); }

double Polytope::diameter() const {
  double best = 0.0;
  for (Index i = 0; i < vertices_.rows(); ++i)
    for (Index j = i + 1; j < vertices_.rows(); ++j)
      best = std::max(best, (vertices_.row(i) - vertices_.row(j)).norm());
  return best;
}

double Polytope::maxViolation(const Vector& x) const {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Facet& f : facets_) worst = std::max(worst, f.normal.dot(x) - f.offset);
  return worst;
}

bool Polytope::contains(const Vector& x, double tol) const {
  return maxViolation(x) <= tol * scale_;
}

// ---------------------------------------------------------------------------

LiftPoint LiftPoint::fromCoords(Vector coords, double tol) {
  LiftPoint lp;
  for (Index i = 0; i < coords.size(); ++i) {
    if (coords(i) <= tol) coords(i) = std::max(coords(i), 0.0);
    else if (coords(i) >= 1.0 - tol) coords(i) = std::min(coords(i), 1.0);
    else lp.freeIndices.push_back(i);
  }
  lp.coords = std::move(coords);
  return lp;
}

LiftPoint LiftPoint::fromBits(const BitVector& bits) {
  LiftPoint lp;
  lp.coords = bits.toVector();
  return lp;
}

BitVector LiftPoint::anchor() const {
  BitVector b(coords.size());
  for (Index i = 0; i < coords.size(); ++i) b.set(i, coords(i) > 0.5);
  for (Index i : freeIndices) b.set(i, false);
  return b;
}

Zonotope canonicalize(const Zonotope& Z) {
  const Matrix& G = Z.generators();
  std::vector<Index> order(static_cast<std::size_t>(G.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    for (Index j = 0; j < G.cols(); ++j) {
      if (G(a, j) < G(b, j)) return true;
      if (G(a, j) > G(b, j)) return false;
    }
    return false;
  });
  Matrix sorted(G.rows(), G.cols());
  for (std::size_t k = 0; k < order.size(); ++k) sorted.row(static_cast<Index>(k)) = G.row(order[k]);
  return Zonotope(std::move(sorted), Z.translation());
}

bool isGeneralPosition(const Zonotope& Z, double tol) {
  const Matrix& G = Z.generators();
  const Index d = Z.dim();
  Vector norms = G.rowwise().norm();
  if ((norms.array() <= 0.0).any()) return false;
  bool ok = true;
  forEachSubset(static_cast<int>(Z.rank()), static_cast<int>(d), [&](const std::vector<int>& sub) {
    if (!ok) return;
    Matrix M(d, d);
    double prod = 1.0;
    for (Index r = 0; r < d; ++r) {
      M.row(r) = G.row(sub[static_cast<std::size_t>(r)]);
      prod *= norms(sub[static_cast<std::size_t>(r)]);
    }
    if (std::abs(M.determinant()) <= tol * prod) ok = false;
  });
  return ok;
}

bool isCubicalVertexAVertex(const Zonotope& Z, const BitVector& e) {
  if (e.size() != Z.rank()) throw Error(ErrorCode::DimensionMismatch, "bit vector length differs from rank");
  const Index d = Z.dim();
  LinearProgram lp = LinearProgram::withVariables(d);
  for (Index j = 0; j < d; ++j) lp.lower(j) = -LinearProgram::kInf;
  const Matrix& G = Z.generators();
  for (Index i = 0; i < Z.rank(); ++i) {
    if (G.row(i).norm() == 0.0) {
      if (e[i]) return false;
      continue;
    }
    lp.addConstraint(G.row(i).transpose(), e[i] ? Sense::GreaterEqual : Sense::LessEqual,
                     e[i] ? 1.0 : -1.0);
  }
  const LPSolution sol = solveLP(lp);
  return sol.status != LPStatus::Infeasible;
}

std::uint64_t expectedVertexCount(Index n, Index d) {
  std::uint64_t total = 0;
  for (Index k = 0; k < d; ++k) total += binomial(static_cast<int>(n - 1), static_cast<int>(k));
  return 2 * total;
}

std::vector<ZonotopeVertex> enumerateVertices(const Zonotope& Z, int rankCap) {
  const Index n = Z.rank();
  if (n > rankCap || n > 62) {
    std::ostringstream os;
    os << "rank " << n << " exceeds the vertex enumeration cap " << rankCap;
    throw Error(ErrorCode::RankCapExceeded, os.str());
  }
  std::vector<ZonotopeVertex> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BitVector bits = BitVector::fromMask(mask, n);
    if (isCubicalVertexAVertex(Z, bits)) {
      Vector pt = Z.point(bits);
      out.push_back({std::move(bits), std::move(pt)});
    }
  }
  return out;
}

std::vector<ZonotopeFacet> zonotopeFacets(const Zonotope& Z) {
  const Matrix& G = Z.generators();
  const Index d = Z.dim();
  std::vector<ZonotopeFacet> out;
  forEachSubset(static_cast<int>(Z.rank()), static_cast<int>(d - 1), [&](const std::vector<int>& sub) {
    Matrix GS(d - 1, d);
    double prod = 1.0;
    for (Index r = 0; r < d - 1; ++r) {
      GS.row(r) = G.row(sub[static_cast<std::size_t>(r)]);
      prod *= G.row(sub[static_cast<std::size_t>(r)]).norm();
    }
    Vector eta = minorNormal(GS);
    const double nrm = eta.norm();
    if (!(nrm > kGeneralPositionTol * prod) || nrm == 0.0) return;
    eta /= nrm;
    std::vector<Index> parallel(sub.begin(), sub.end());
    for (double sign : {1.0, -1.0}) {
      const Vector n = sign * eta;
      double h = n.dot(Z.translation());
      for (Index i = 0; i < Z.rank(); ++i) h += std::max(0.0, n.dot(G.row(i).transpose()));
      bool dup = false;
      for (const ZonotopeFacet& f : out) dup = dup || (f.facet.normal - n).norm() < 1e-12;
      if (!dup) out.push_back({Facet{n, h}, parallel});
    }
  });
  return out;
}

Polytope asPolytope(const Zonotope& Z, int rankCap) {
  const auto verts = enumerateVertices(Z, rankCap);
  Matrix V(static_cast<Index>(verts.size()), Z.dim());
  for (std::size_t k = 0; k < verts.size(); ++k) V.row(static_cast<Index>(k)) = verts[k].point.transpose();
  std::vector<Facet> facets;
  for (const auto& zf : zonotopeFacets(Z)) facets.push_back(zf.facet);
  return Polytope::fromVerticesAndFacets(V, std::move(facets));
}

namespace {

double zonotopeScale(const Zonotope& Z) {
  return std::max(Z.generators().rowwise().norm().sum(), 1e-300);
}

double boundaryGap(const std::vector<ZonotopeFacet>& facets, const Vector& y) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& f : facets) worst = std::max(worst, f.facet.normal.dot(y) - f.facet.offset);
  return worst;
}

}  // namespace

LiftPoint liftBoundaryPoint(const Zonotope& Z, const Vector& q, double tol) {
  const double scale = zonotopeScale(Z);
  const ZonotopeProjection proj = projectPointToZonotope(Z, q);
  if (proj.distance > tol * scale)
    throw Error(ErrorCode::NotOnBoundary, "point lies outside the zonotope");
  const auto facets = zonotopeFacets(Z);
  if (boundaryGap(facets, q) < -tol * scale)
    throw Error(ErrorCode::NotOnBoundary, "point lies in the interior of the zonotope");
  LiftPoint lift = LiftPoint::fromCoords(proj.lift, tol);
  const Index k = static_cast<Index>(lift.freeIndices.size());
  if (k > 0) {
    Matrix GF(k, Z.dim());
    for (Index r = 0; r < k; ++r) GF.row(r) = Z.generators().row(lift.freeIndices[static_cast<std::size_t>(r)]);
    Eigen::FullPivLU<Matrix> lu(GF);
    lu.setThreshold(1e-10);
    if (k >= Z.dim() || lu.rank() < k)
      throw Error(ErrorCode::NonUniqueLift, "boundary point has a non-unique lift");
  }
  return lift;
}

Vector pushforward(const Zonotope& source, const Zonotope& target, const LiftPoint& x) {
  if (source.rank() != target.rank() || source.dim() != target.dim())
    throw Error(ErrorCode::DimensionMismatch, "pushforward needs zonotopes of equal rank and dimension");
  return target.point(x.coords);
}

bool isPushforwardProper(const Zonotope& source, const Zonotope& target, double tol) {
  if (source.rank() != target.rank() || source.dim() != target.dim())
    throw Error(ErrorCode::DimensionMismatch, "pushforward needs zonotopes of equal rank and dimension");
  const auto targetFacets = zonotopeFacets(target);
  const double scale = zonotopeScale(target);
  auto onBoundary = [&](const Vector& lift) {
    return std::abs(boundaryGap(targetFacets, target.point(lift))) <= tol * scale;
  };
  for (const auto& v : enumerateVertices(source)) {
    if (!onBoundary(v.bits.toVector())) return false;
  }
  for (const auto& f : zonotopeFacets(source)) {
    Vector lift(source.rank());
    for (Index i = 0; i < source.rank(); ++i)
      lift(i) = f.facet.normal.dot(source.generators().row(i).transpose()) > 0.0 ? 1.0 : 0.0;
    for (Index i : f.parallelGenerators) lift(i) = 0.5;
    if (!onBoundary(lift)) return false;
  }
  return true;
}

FaceDescriptor minimalFaceOfPolytope(const Polytope& P, const Vector& x, double tol) {
  const double t = tol * P.scale();
  if (P.maxViolation(x) > t)
    throw Error(ErrorCode::PointOutsidePolytope, "point lies outside the polytope");
  FaceDescriptor face;
  face.side = FaceSide::OfPolytope;
  const auto& facets = P.facets();
  for (std::size_t k = 0; k < facets.size(); ++k) {
    if (facets[k].normal.dot(x) - facets[k].offset >= -t) face.activeFacets.push_back(static_cast<Index>(k));
  }
  if (face.activeFacets.empty()) {
    for (Index i = 0; i < P.vertexCount(); ++i) face.vertexIds.push_back(i);
    face.hull.base = x;
    face.hull.normals = Matrix(0, P.dim());
    face.hull.offsets = Vector(0);
    return face;
  }
  for (Index i = 0; i < P.vertexCount(); ++i) {
    const Vector v = P.vertex(i);
    bool tight = true;
    for (Index k : face.activeFacets) {
      const auto& f = facets[static_cast<std::size_t>(k)];
      tight = tight && std::abs(f.normal.dot(v) - f.offset) <= 1e3 * t;
    }
    if (tight) face.vertexIds.push_back(i);
  }
  if (face.vertexIds.empty())
    throw Error(ErrorCode::DegenerateInput, "active facets share no vertex");
  const Vector base = P.vertex(face.vertexIds.front());
  Matrix D(static_cast<Index>(face.vertexIds.size()) - 1, P.dim());
  for (std::size_t k = 1; k < face.vertexIds.size(); ++k)
    D.row(static_cast<Index>(k) - 1) = P.vertices().row(face.vertexIds[k]) - base.transpose();
  face.hull.base = base;
  face.hull.normals = orthogonalComplement(D, P.dim(), 1e-9);
  face.hull.offsets = face.hull.normals * base;
  return face;
}

FaceDescriptor faceOfZonotope(const Zonotope& Z, const LiftPoint& lift) {
  FaceDescriptor face;
  face.side = FaceSide::OfZonotope;
  face.anchor = lift.anchor();
  face.freeGenerators = lift.freeIndices;
  const Index k = static_cast<Index>(lift.freeIndices.size());
  Matrix GF(k, Z.dim());
  for (Index r = 0; r < k; ++r) GF.row(r) = Z.generators().row(lift.freeIndices[static_cast<std::size_t>(r)]);
  face.hull.base = Z.point(face.anchor);
  face.hull.normals = orthogonalComplement(GF, Z.dim(), 1e-10);
  face.hull.offsets = face.hull.normals * face.hull.base;
  return face;
}

AffineHull faceAffineHull(const FaceDescriptor& face) {
  if (face.codim() == 0)
    throw Error(ErrorCode::CodimZeroFace, "face is full-dimensional; its affine hull is the whole space");
  return face.hull;
}

Matrix convexHull2D(const Matrix& points, double tol) {
  if (points.cols() != 2) throw Error(ErrorCode::DimensionNot2, "convexHull2D needs planar points");
  std::vector<Eigen::Vector2d> pts;
  for (Index i = 0; i < points.rows(); ++i) pts.emplace_back(points(i, 0), points(i, 1));
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  const double eps = tol * std::max(scale * scale, 1e-300);
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> hull;
  if (pts.size() < 3) {
    hull = pts;
  } else {
    std::vector<Eigen::Vector2d> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= eps) --k;
      h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
      while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    hull = std::move(h);
  }
  Matrix out(static_cast<Index>(hull.size()), 2);
  for (std::size_t i = 0; i < hull.size(); ++i) out.row(static_cast<Index>(i)) = hull[i].transpose();
  return out;
}

double polygonArea(const Matrix& v) {
  double a = 0.0;
  const Index m = v.rows();
  for (Index i = 0; i < m; ++i) {
    const Index j = (i + 1) % m;
    a += v(i, 0) * v(j, 1) - v(j, 0) * v(i, 1);
  }
  return 0.5 * a;
}

}  // namespace zonofit

#ifndef ZONOFIT_GEOM_HPP_
#define ZONOFIT_GEOM_HPP_

#include "zonofit/common.hpp"

#include <optional>
#include <vector>

namespace zonofit {

/// Binary vector e in {0,1}^n naming the cubical vertex Q^T e + mu.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(Index n) : bits_(static_cast<std::size_t>(n), 0) {}
  static BitVector fromMask(std::uint64_t mask, Index n);

  Index size() const { return static_cast<Index>(bits_.size()); }
  bool operator[](Index i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  void set(Index i, bool v) { bits_[static_cast<std::size_t>(i)] = v ? 1 : 0; }
  Vector toVector() const;
  std::uint64_t mask() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Zonotope Z(Q, mu) = { Q^T x + mu : x in [0,1]^n }; row i of Q is the
/// generator g_i.
class Zonotope {
 public:
  Zonotope(Matrix generators, Vector translation);

  const Matrix& generators() const { return generators_; }
  const Vector& translation() const { return translation_; }
  Index rank() const { return generators_.rows(); }
  Index dim() const { return generators_.cols(); }

  /// Q^T x + mu for a lift x in [0,1]^n.
  Vector point(const Vector& lift) const;
  Vector point(const BitVector& bits) const;
  Vector center() const;

 private:
  Matrix generators_;
  Vector translation_;
};

/// Outward facet <normal, y> <= offset with unit normal.
struct Facet {
  Vector normal;
  double offset = 0.0;
};

/// Full-dimensional polytope held by its irredundant vertex list and
/// derived facet list.
class Polytope {
 public:
  /// Drops duplicate and non-extreme points, rejects lower-dimensional input
  /// (Error DegenerateInput), and derives facets by brute force.
  static Polytope fromPoints(const Matrix& points);
  /// Trusts the caller's facet list after checking it against the vertices.
  static Polytope fromVerticesAndFacets(const Matrix& vertices,
                                        std::vector<Facet> facets);

  const Matrix& vertices() const { return vertices_; }
  Vector vertex(Index i) const { return vertices_.row(i).transpose(); }
  Index vertexCount() const { return vertices_.rows(); }
  Index dim() const { return vertices_.cols(); }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Largest vertex distance from the vertex barycenter.
  double scale() const { return scale_; }
  Vector barycenter() const;
  double diameter() const;

  /// Largest facet violation max_k <eta_k, x> - c_k.
  double maxViolation(const Vector& x) const;
  bool contains(const Vector& x, double tol = 1e-9) const;

 private:
  Polytope(Matrix vertices, std::vector<Facet> facets);
  Matrix vertices_;
  std::vector<Facet> facets_;
  double scale_ = 1.0;
};

/// Point of I^n with the indices strictly inside (0,1).
struct LiftPoint {
  Vector coords;
  std::vector<Index> freeIndices;

  static LiftPoint fromCoords(Vector coords, double tol = 1e-9);
  static LiftPoint fromBits(const BitVector& bits);
  /// Non-free entries rounded to {0,1}; free entries set to 0.
  BitVector anchor() const;
};

/// Aff(face) = { y : <eta_k, y> = c_k for all k } with orthonormal eta_k.
struct AffineHull {
  Vector base;
  Matrix normals;  // m x d, rows orthonormal
  Vector offsets;  // m
  Index codim() const { return normals.rows(); }
};

enum class FaceSide { OfZonotope, OfPolytope };

struct FaceDescriptor {
  FaceSide side = FaceSide::OfPolytope;
  // Zonotope faces: anchor vertex bits and free generator indices.
  BitVector anchor;
  std::vector<Index> freeGenerators;
  // Polytope faces: vertex ids and the active facet ids.
  std::vector<Index> vertexIds;
  std::vector<Index> activeFacets;
  AffineHull hull;

  Index codim() const { return hull.codim(); }
};

struct ZonotopeVertex {
  BitVector bits;
  Vector point;
};

/// Facet of a zonotope together with the d-1 generators parallel to it.
struct ZonotopeFacet {
  Facet facet;
  std::vector<Index> parallelGenerators;
};

inline constexpr double kGeneralPositionTol = 1e-10;
inline constexpr int kDefaultRankCap = 20;

Zonotope canonicalize(const Zonotope& Z);

/// Every d x d minor exceeds tol times the product of its row norms.
bool isGeneralPosition(const Zonotope& Z, double tol = kGeneralPositionTol);

/// Strict linear separation of {g_i : e_i = 1} from {g_i : e_i = 0} by a
/// hyperplane through the origin, decided by LP feasibility with margins +-1.
bool isCubicalVertexAVertex(const Zonotope& Z, const BitVector& e);

/// Brute force over all 2^n cubical vertices. Throws RankCapExceeded when
/// n exceeds `rankCap`.
std::vector<ZonotopeVertex> enumerateVertices(const Zonotope& Z,
                                              int rankCap = kDefaultRankCap);

/// 2 * sum_{k<d} C(n-1, k).
std::uint64_t expectedVertexCount(Index n, Index d);

/// H-description of Z from its (d-1)-subsets of generators.
std::vector<ZonotopeFacet> zonotopeFacets(const Zonotope& Z);

/// Z viewed as a Polytope (vertex enumeration plus zonotope facets).
Polytope asPolytope(const Zonotope& Z, int rankCap = kDefaultRankCap);

/// Unique x in I^n with Q^T x + mu = q for boundary q.
LiftPoint liftBoundaryPoint(const Zonotope& Z, const Vector& q, double tol = 1e-9);

/// Q'^T x + mu' for the target's parameters.
Vector pushforward(const Zonotope& source, const Zonotope& target,
                   const LiftPoint& x);

/// True when every vertex lift and facet-centre lift of `source` lands on
/// the boundary of `target`.
bool isPushforwardProper(const Zonotope& source, const Zonotope& target,
                         double tol = 1e-9);

/// Minimal face of P containing x (active facets within tol).
FaceDescriptor minimalFaceOfPolytope(const Polytope& P, const Vector& x,
                                     double tol = 1e-9);

/// Face of Z spanned by the free generators of a lift.
FaceDescriptor faceOfZonotope(const Zonotope& Z, const LiftPoint& lift);

/// Throws CodimZeroFace when the face is full-dimensional.
AffineHull faceAffineHull(const FaceDescriptor& face);

/// Orthonormal basis (rows) of the orthogonal complement of span(rows of D).
Matrix orthogonalComplement(const Matrix& D, Index dim, double tol = 1e-10);

/// Signed-minor normal of d-1 vectors in R^d: entry j is (-1)^j times
/// the minor with column j removed (one-based j). Orthogonal to every row.
Vector minorNormal(const Matrix& rows);

/// Counter-clockwise hull of planar points without collinear vertices.
Matrix convexHull2D(const Matrix& points, double tol = 1e-12);

double polygonArea(const Matrix& ccwVertices);

}  // namespace zonofit

#endif  // ZONOFIT_GEOM_HPP_

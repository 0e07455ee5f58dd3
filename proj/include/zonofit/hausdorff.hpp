#ifndef ZONOFIT_HAUSDORFF_HPP_
#define ZONOFIT_HAUSDORFF_HPP_

#include "zonofit/geom.hpp"

#include <vector>

namespace zonofit {

inline constexpr double kTolActive = 1e-7;
inline constexpr double kTolStrict = 1e-8;

/// Which body contributes the vertex of an achieving pair.
enum class PairSide { PVertex, ZVertex };

const char* pairSideName(PairSide side) noexcept;

/// One (p, q) pair realizing the distance; p lies in P, q in Z.
struct AchievingPair {
  Vector p;
  Vector q;
  PairSide side = PairSide::PVertex;
  /// Vertex id in P (PVertex) or in the enumerated vertex list of Z (ZVertex).
  Index vertexId = 0;
  /// Lift of q in I^n.
  LiftPoint lift;
  /// F_p in Z for PVertex pairs, F_q in P for ZVertex pairs.
  FaceDescriptor face;
  double distance = 0.0;
};

struct DistanceResult {
  double value = 0.0;
  std::vector<AchievingPair> pairs;
};

/// Vertices and facets of a zonotope, computed once and shared by the
/// distance routines.
struct ZonotopeGeometry {
  explicit ZonotopeGeometry(const Zonotope& Z, int rankCap = kDefaultRankCap);

  Zonotope zonotope;
  std::vector<ZonotopeVertex> vertices;
  Polytope polytope;
};

/// Exact Hausdorff distance between P and Z with every pair within
/// tolActive * value of the maximum.
DistanceResult hausdorffDistance(const Polytope& P, const Zonotope& Z,
                                 double tolActive = kTolActive);
DistanceResult hausdorffDistance(const Polytope& P, const ZonotopeGeometry& G,
                                 double tolActive = kTolActive);

/// Hausdorff distance between the two vertex sets.
DistanceResult coarseHausdorffDistance(const Polytope& P, const Zonotope& Z,
                                       double tolActive = kTolActive);
DistanceResult coarseHausdorffDistance(const Polytope& P, const ZonotopeGeometry& G,
                                       double tolActive = kTolActive);

/// Interior points are stable; boundary points are not; otherwise x - Pi(x)
/// must lie in the relative interior of the normal cone at Pi(x).
bool isHausdorffStable(const Vector& x, const Polytope& P, double tolStrict = kTolStrict);

struct LocalityReport {
  bool generalPosition = true;
  /// P vertices outside Z whose projection onto Z has no unique lift.
  std::vector<Index> stableVertices;
  /// P vertices that are not Hausdorff stable relative to Z.
  std::vector<Index> hausdorffStableP;
  /// Z vertices (ids into the enumerated list) not stable relative to P.
  std::vector<Index> hausdorffStableZ;

  bool ok() const {
    return generalPosition && stableVertices.empty() && hausdorffStableP.empty() &&
           hausdorffStableZ.empty();
  }
};

LocalityReport checkLocality(const Polytope& P, const Zonotope& Z);
LocalityReport checkLocality(const Polytope& P, const ZonotopeGeometry& G);

/// || sum_k (<eta_k, u> - c_k) eta_k ||; zero for a codim-0 hull.
double distPointToAffine(const Vector& u, const AffineHull& hull);

/// Smooth piece of the local max form of d_P around a fixed zonotope.
struct SmoothTerm {
  PairSide side = PairSide::PVertex;
  Index vertexId = 0;
  /// PVertex: the fixed vertex p of P.
  Vector p;
  /// PVertex: anchor bits and free generators of F_p; ZVertex: vertex bits.
  BitVector anchor;
  std::vector<Index> freeGenerators;
  /// ZVertex: affine hull of F_q in P (fixed).
  AffineHull polytopeFace;

  /// Value of the term at a nearby zonotope with the same rank.
  double evaluate(const Zonotope& Z) const;
};

SmoothTerm termFromPair(const AchievingPair& pair);

/// One term per vertex of P and per vertex of Z0. Throws LocalityViolation.
std::vector<SmoothTerm> localTerms(const Polytope& P, const Zonotope& Z0);

}  // namespace zonofit

#endif  // ZONOFIT_HAUSDORFF_HPP_

#ifndef ZONOFIT_SUBGRAD_HPP_
#define ZONOFIT_SUBGRAD_HPP_

#include "zonofit/hausdorff.hpp"

#include <vector>

namespace zonofit {

/// Flat parameter vector of length n*d + d: generator entries row-major
/// (g_11 .. g_1d, g_21 .. g_nd) followed by mu_1 .. mu_d.
using ParamVector = Vector;

ParamVector toParams(const Zonotope& Z);
Zonotope fromParams(const ParamVector& x, Index n, Index d);
inline Index paramIndex(Index i, Index j, Index d) { return i * d + j; }
inline Index muIndex(Index n, Index j, Index d) { return n * d + j; }

enum class Objective { Exact, Coarse };

const char* objectiveName(Objective obj) noexcept;

struct SubdifferentialSet {
  double value = 0.0;
  std::vector<ParamVector> gradients;
  std::vector<AchievingPair> activePairs;
};

/// Gradient of a ZVertex term: (w/|w|) (x) (e, 1) with w the offset of
/// Q^T e + mu from the fixed affine hull of F_q.
ParamVector gradDeltaQ(const SmoothTerm& term, const Zonotope& Z);

/// Unit normal of the hyperplane spanned by d-1 generators, signed so that
/// <eta, p - v> > 0. Throws SingularSubmatrix when the minors vanish.
Vector facetNormal(const Zonotope& Z, const std::vector<Index>& freeIndices,
                   const Vector& p, const Vector& v);

/// Anchor vertex of F_p used by the facet formula: free bits at 0 or at 1.
enum class FaceAnchor { Low, High };

/// Gradient of a PVertex term. Facets use the minor formula with the chosen
/// anchor; lower-dimensional faces use the projection chain rule.
ParamVector gradDeltaP(const SmoothTerm& term, const Zonotope& Z,
                       FaceAnchor anchor = FaceAnchor::Low);

/// Gradient of ||p - Q^T e - mu|| for the coarse objective.
ParamVector gradCoarsePair(const AchievingPair& pair, const Zonotope& Z);

ParamVector termGradient(const SmoothTerm& term, const Zonotope& Z);

/// One gradient per active pair. The exact objective throws
/// LocalityViolation unless the locality conditions hold; the coarse one
/// requires general position only.
SubdifferentialSet clarkeSubdifferential(const Polytope& P, const Zonotope& Z,
                                         double tolActive = kTolActive,
                                         Objective objective = Objective::Exact);
SubdifferentialSet clarkeSubdifferential(const Polytope& P, const ZonotopeGeometry& G,
                                         double tolActive = kTolActive,
                                         Objective objective = Objective::Exact);

/// Central differences of term.evaluate over every parameter.
ParamVector finiteDifferenceGradient(const SmoothTerm& term, const Zonotope& Z, double h);

}  // namespace zonofit

#endif  // ZONOFIT_SUBGRAD_HPP_

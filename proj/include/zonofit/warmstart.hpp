#ifndef ZONOFIT_WARMSTART_HPP_
#define ZONOFIT_WARMSTART_HPP_

#include "zonofit/descent.hpp"

namespace zonofit {

/// Convex polygon with a counter-clockwise vertex cycle, symmetric about center.
struct SymmetricPolygon {
  Matrix vertices;
  Vector center;
};

/// Hull of the vertices of P and their reflections through O.
SymmetricPolygon envelope2D(const Polytope& P, const Vector& O);

/// Centre minimizing the envelope area on a refined grid around the vertex
/// barycenter (9 x 9 points per level).
Vector chooseCenter2D(const Polytope& P, int gridDepth = 3);

/// Generators from one edge of each opposite pair; the translation makes the
/// vertex sets coincide. Throws AsymmetryTooLarge.
Zonotope symmetricPolygonToZonotope(const SymmetricPolygon& S, double tol = 1e-9);

/// Planar warmstart adapted to rank n: the n longest generators are kept
/// (centre preserved) and missing ones are padded with random vectors of
/// length 1e-5 * diam(P).
Zonotope warmstart2D(const Polytope& P, Index n, Rng& rng, int gridDepth = 3);

/// Principal axes scaled to twice the vertex standard deviation, padded with short random
/// generators, centred on the vertex barycenter.
Zonotope warmstartGeneric(const Polytope& P, Index n, Rng& rng);

/// warmstart2D in the plane, warmstartGeneric otherwise.
Zonotope warmstart(const Polytope& P, Index n, Rng& rng);

/// Random generators of length comparable to P, centred on its barycenter.
Zonotope randomStart(const Polytope& P, Index n, Rng& rng);

}  // namespace zonofit

#endif  // ZONOFIT_WARMSTART_HPP_

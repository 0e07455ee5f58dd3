#ifndef ZONOFIT_IO_HPP_
#define ZONOFIT_IO_HPP_

#include "zonofit/descent.hpp"

#include <string>

namespace zonofit {

/// {"vertices": [[...], ...], "facets": optional [[eta..., c], ...]}
Polytope polytopeFromJson(const std::string& text);
std::string polytopeToJson(const Polytope& P);

/// {"generators": [[...], ...], "translation": [...]}
Zonotope zonotopeFromJson(const std::string& text);
std::string zonotopeToJson(const Zonotope& Z);

/// Value plus the achieving pairs (points, side, lift) as JSON.
std::string distanceReportJson(const DistanceResult& result, bool coarse);

/// Header iter,d_exact,d_coarse,step,rule,active_pairs,cone_status,ms.
std::string traceToCsv(const DescentTrace& trace);

/// Outlines of P and Z with one marker per achieving pair. Planar only.
std::string renderSvg(const Polytope& P, const Zonotope& Z, const std::vector<AchievingPair>& pairs);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

/// Random convex polygon: m points on a jittered circle, hull taken.
Polytope randomPolygon(Rng& rng, int m);
/// Random full-dimensional polytope as the hull of m Gaussian points.
Polytope randomPolytope(Rng& rng, Index d, int m);
/// Random zonotope with n Gaussian generators in general position.
Zonotope randomZonotope(Rng& rng, Index n, Index d);

}  // namespace zonofit

#endif  // ZONOFIT_IO_HPP_

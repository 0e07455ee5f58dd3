#ifndef ZONOFIT_CONE_HPP_
#define ZONOFIT_CONE_HPP_

#include "zonofit/solvers.hpp"
#include "zonofit/subgrad.hpp"

#include <vector>

namespace zonofit {

/// Rows (p_i - q_i) (x) (e_i, 1) in parameter layout, one per pair.
struct FeasibilityCone {
  Matrix rows;
  std::vector<AchievingPair> pairs;
};

FeasibilityCone buildCone(const std::vector<AchievingPair>& pairs, Index n, Index d);

enum class DirectionStatus { Descent, FeasibleEmpty, ConeEmptyInterior };
enum class Certificate { None, CertifiedLocalMin, CertifiedLocalMinOfCoarse, Heuristic };

const char* directionStatusName(DirectionStatus s) noexcept;
const char* certificateName(Certificate c) noexcept;

struct DirectionResult {
  DirectionStatus status = DirectionStatus::FeasibleEmpty;
  Certificate certificate = Certificate::None;
  ParamVector direction;
  std::vector<double> taus;
  /// Optimal t* of the cone interior LP.
  double coneMargin = 0.0;
  /// Radius of the Chebyshev ball of the feasible subdifferential.
  double radius = 0.0;
  /// Direction came from the cone alone after an empty feasible set.
  bool fallbackUsed = false;
};

struct DirectionOptions {
  Objective objective = Objective::Exact;
  bool coneFallback = false;
  double interiorThreshold = kConeInteriorThreshold;
};

/// Chebyshev centre of C interior intersected with the negated Clarke set.
DirectionResult descentDirection(const SubdifferentialSet& subdiff, const FeasibilityCone& cone,
                                 const DirectionOptions& options = {});

/// tau_i = 2 <D_i, p_i - q_i> / |D_i|^2 with D_i = dQ^T e_i + dmu. Throws
/// NonImprovingRow when a pair does not improve along the direction.
std::vector<double> tauLimits(const std::vector<AchievingPair>& pairs, const ParamVector& direction,
                              Index n, Index d);

/// Displacement dQ^T e + dmu of the point with lift e along a direction.
Vector displacement(const ParamVector& direction, const Vector& lift, Index d);

}  // namespace zonofit

#endif  // ZONOFIT_CONE_HPP_

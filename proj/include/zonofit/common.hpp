#ifndef ZONOFIT_COMMON_HPP_
#define ZONOFIT_COMMON_HPP_

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonofit {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DegenerateInput,
  RankCapExceeded,
  IterationLimit,
  LPNumericalFailure,
  NotOnBoundary,
  NonUniqueLift,
  PointOutsidePolytope,
  CodimZeroFace,
  DegenerateFace,
  SingularSubmatrix,
  LocalityViolation,
  NonImprovingRow,
  EmptyTaus,
  PerturbationBudgetExceeded,
  InfeasibleRegion,
  UnboundedRegion,
  DimensionNot2,
  AsymmetryTooLarge,
  Parse,
};

const char* errorCodeName(ErrorCode code) noexcept;

// Every failure inside the library surfaces as this exception; the C API
// translates the code into a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Tolerances and iteration caps shared by the dense solvers.
struct SolverConfig {
  double feasibilityTol = 1e-9;
  double kktTol = 1e-9;
  /// Iteration cap is iterationFactor * (variables + constraints).
  int iterationFactor = 10;
  /// Floor for the iteration cap on tiny problems.
  int minIterations = 200;
};

inline const SolverConfig& defaultSolverConfig() {
  static const SolverConfig config{};
  return config;
}

/// Number of k-subsets of {0..n-1}; small arguments only.
std::uint64_t binomial(int n, int k);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void forEachSubset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace zonofit

#endif  // ZONOFIT_COMMON_HPP_

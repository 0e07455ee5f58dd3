#include "zonofit/geom.hpp"
#include "zonofit/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace zonofit {

namespace {

constexpr int kLower = -1;
constexpr int kUpper = 1;
constexpr int kFree = 0;

double boxKktResidual(const Vector& x, const Vector& g, const std::vector<int>& state) {
  double worst = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    switch (state[static_cast<std::size_t>(i)]) {
      case kLower: worst = std::max(worst, -g(i)); break;
      case kUpper: worst = std::max(worst, g(i)); break;
      default: worst = std::max(worst, std::abs(g(i))); break;
    }
  }
  return worst;
}

}  // namespace

QPResult solveBoxLeastSquares(const Matrix& A, const Vector& b,
                              const SolverConfig& config) {
  const Index n = A.cols();
  if (b.size() != A.rows())
    throw Error(ErrorCode::DimensionMismatch, "box least squares: size mismatch");

  Vector x = Vector::Zero(n);
  std::vector<int> state(static_cast<std::size_t>(n), kLower);
  const double anorm = A.norm();
  const double gtol = 1e-13 * (1.0 + anorm * (b.norm() + anorm));
  const int maxIterations = std::max(
      config.minIterations, config.iterationFactor * static_cast<int>(3 * n + A.rows()));
  int iterations = 0;

  while (true) {
    const Vector g = A.transpose() * (A * x - b);
    Index release = -1;
    for (Index i = 0; i < n; ++i) {
      const int s = state[static_cast<std::size_t>(i)];
      if ((s == kLower && g(i) < -gtol) || (s == kUpper && g(i) > gtol)) {
        release = i;
        break;
      }
    }
    if (release < 0) break;
    state[static_cast<std::size_t>(release)] = kFree;

    while (true) {
      if (++iterations > maxIterations)
        throw Error(ErrorCode::IterationLimit, "box least squares iteration limit");
      std::vector<Index> freeSet;
      for (Index i = 0; i < n; ++i)
        if (state[static_cast<std::size_t>(i)] == kFree) freeSet.push_back(i);
      const Index k = static_cast<Index>(freeSet.size());
      if (k == 0) break;
      Matrix AF(A.rows(), k);
      for (Index c = 0; c < k; ++c) AF.col(c) = A.col(freeSet[static_cast<std::size_t>(c)]);
      const Vector r = b - A * x;
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(AF);
      cod.setThreshold(1e-12);
      const Vector step = cod.solve(r);

      double alpha = 1.0;
      Index blocking = -1;
      for (Index c = 0; c < k; ++c) {
        const Index i = freeSet[static_cast<std::size_t>(c)];
        const double z = x(i) + step(c);
        double a = 1.0;
        if (z < 0.0) a = x(i) / (x(i) - z);
        else if (z > 1.0) a = (1.0 - x(i)) / (z - x(i));
        if (a < alpha) {
          alpha = a;
          blocking = i;
        }
      }
      for (Index c = 0; c < k; ++c) {
        const Index i = freeSet[static_cast<std::size_t>(c)];
        x(i) = std::clamp(x(i) + alpha * step(c), 0.0, 1.0);
      }
      if (blocking < 0) break;
      // Blocking variable and anything else numerically at a bound.
      for (Index c = 0; c < k; ++c) {
        const Index i = freeSet[static_cast<std::size_t>(c)];
        if (i == blocking || x(i) <= 1e-15 || x(i) >= 1.0 - 1e-15) {
          if (x(i) <= 0.5) {
            x(i) = 0.0;
            state[static_cast<std::size_t>(i)] = kLower;
          } else {
            x(i) = 1.0;
            state[static_cast<std::size_t>(i)] = kUpper;
          }
        }
      }
    }
  }

  QPResult res;
  res.minimizer = x;
  const Vector resid = A * x - b;
  res.objective = 0.5 * resid.squaredNorm();
  res.activeSet = state;
  res.kktResidual = boxKktResidual(x, A.transpose() * resid, state);
  res.iterations = iterations;
  return res;
}

QPResult solveMinNormPoint(const Matrix& points, const SolverConfig& config) {
  const Index m = points.rows();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "min-norm point of empty set");
  double maxNorm2 = 0.0;
  Index start = 0;
  double bestNorm2 = points.row(0).squaredNorm();
  for (Index i = 0; i < m; ++i) {
    const double nn = points.row(i).squaredNorm();
    maxNorm2 = std::max(maxNorm2, nn);
    if (nn < bestNorm2) {
      bestNorm2 = nn;
      start = i;
    }
  }
  const double eps1 = 1e-14 * std::max(maxNorm2, 1e-300);
  const double eps2 = 1e-12;

  std::vector<Index> S{start};
  Vector lambda = Vector::Zero(m);
  lambda(start) = 1.0;
  Vector w = points.row(start).transpose();
  const int maxIterations =
      std::max(config.minIterations, config.iterationFactor * static_cast<int>(m + points.cols()) * 4);
  int iterations = 0;

  auto inS = [&](Index j) { return std::find(S.begin(), S.end(), j) != S.end(); };

  while (true) {
    if (++iterations > maxIterations)
      throw Error(ErrorCode::IterationLimit, "min-norm point iteration limit");
    const double wn2 = w.squaredNorm();
    if (wn2 <= 1e-30 * std::max(1.0, maxNorm2)) break;
    Index j = -1;
    double best = 0.0;
    for (Index i = 0; i < m; ++i) {
      const double v = points.row(i).dot(w);
      if (j < 0 || v < best) {
        j = i;
        best = v;
      }
    }
    if (best >= wn2 - eps1) break;
    if (inS(j)) break;
    S.push_back(j);
    lambda(j) = 0.0;

    while (true) {
      if (++iterations > maxIterations)
        throw Error(ErrorCode::IterationLimit, "min-norm point iteration limit");
      const Index k = static_cast<Index>(S.size());
      Matrix K = Matrix::Zero(k + 1, k + 1);
      for (Index a = 0; a < k; ++a) {
        for (Index c = 0; c < k; ++c)
          K(a, c) = points.row(S[static_cast<std::size_t>(a)]).dot(points.row(S[static_cast<std::size_t>(c)]));
        K(a, k) = 1.0;
        K(k, a) = 1.0;
      }
      Vector rhs = Vector::Zero(k + 1);
      rhs(k) = 1.0;
      const Vector sol = K.completeOrthogonalDecomposition().solve(rhs);
      const Vector alpha = sol.head(k);
      bool allPositive = true;
      for (Index a = 0; a < k; ++a) allPositive = allPositive && alpha(a) > eps2;
      if (allPositive) {
        for (Index a = 0; a < k; ++a) lambda(S[static_cast<std::size_t>(a)]) = alpha(a);
        break;
      }
      double theta = 1.0;
      for (Index a = 0; a < k; ++a) {
        if (alpha(a) > eps2) continue;
        const double lam = lambda(S[static_cast<std::size_t>(a)]);
        const double denom = lam - alpha(a);
        if (denom > 0.0) theta = std::min(theta, lam / denom);
      }
      for (Index a = 0; a < k; ++a) {
        const Index idx = S[static_cast<std::size_t>(a)];
        lambda(idx) = theta * alpha(a) + (1.0 - theta) * lambda(idx);
      }
      std::vector<Index> keep;
      for (Index idx : S) {
        if (lambda(idx) > eps2) keep.push_back(idx);
        else lambda(idx) = 0.0;
      }
      if (keep.empty()) {
        // Numerical collapse; restart from the best remaining point.
        keep.push_back(S.back());
        lambda(S.back()) = 1.0;
      }
      S = std::move(keep);
      const double total = lambda.sum();
      lambda /= total;
      if (S.size() == 1) break;
    }
    w = points.transpose() * lambda;
  }

  QPResult res;
  res.minimizer = lambda;
  res.objective = 0.5 * w.squaredNorm();
  res.activeSet.assign(static_cast<std::size_t>(m), kLower);
  for (Index idx : S) res.activeSet[static_cast<std::size_t>(idx)] = kFree;
  double worst = 0.0;
  const double wn2 = w.squaredNorm();
  for (Index i = 0; i < m; ++i) worst = std::max(worst, wn2 - points.row(i).dot(w));
  res.kktResidual = worst;
  res.iterations = iterations;
  return res;
}

ZonotopeProjection projectPointToZonotope(const Zonotope& Z, const Vector& p,
                                          const SolverConfig& config) {
  if (p.size() != Z.dim())
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match zonotope");
  const Matrix A = Z.generators().transpose();
  const Vector b = p - Z.translation();
  const QPResult qp = solveBoxLeastSquares(A, b, config);
  ZonotopeProjection out;
  out.lift = qp.minimizer;
  out.point = Z.point(qp.minimizer);
  out.distance = (p - out.point).norm();
  out.kktResidual = qp.kktResidual;
  return out;
}

PolytopeProjection projectPointToPolytope(const Polytope& P, const Vector& p,
                                          const SolverConfig& config) {
  if (p.size() != P.dim())
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match polytope");
  const Matrix shifted = P.vertices().rowwise() - p.transpose();
  const QPResult qp = solveMinNormPoint(shifted, config);
  PolytopeProjection out;
  out.weights = qp.minimizer;
  out.point = P.vertices().transpose() * qp.minimizer;
  out.distance = (p - out.point).norm();
  out.kktResidual = qp.kktResidual;
  return out;
}

}  // namespace zonofit

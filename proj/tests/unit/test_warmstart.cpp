#include "support.hpp"

#include "fixtures.hpp"

#include <set>

using namespace zonofit;
using fixtures::vec;

namespace {

bool sameVertexSets(const Matrix& A, const Matrix& B, double tol) {
  if (A.rows() != B.rows()) return false;
  for (Index i = 0; i < A.rows(); ++i)
    if ((B.rowwise() - A.row(i)).rowwise().norm().minCoeff() > tol) return false;
  return true;
}

Matrix regularHexagon() {
  Matrix H(6, 2);
  for (int k = 0; k < 6; ++k) H.row(k) << std::cos(k * M_PI / 3), std::sin(k * M_PI / 3);
  return H;
}

}  // namespace

TEST_CASE("envelope of a symmetric polygon is itself") {
  const Polytope P = Polytope::fromPoints(regularHexagon());
  const auto S = envelope2D(P, vec({0.0, 0.0}));
  CHECK(sameVertexSets(S.vertices, P.vertices(), 1e-12));
}

TEST_CASE("triangle envelope about the centroid") {
  Matrix T(3, 2);
  T << 0, 0, 1, 0, 0, 1;
  const Polytope P = Polytope::fromPoints(T);
  const Vector O = vec({1.0 / 3, 1.0 / 3});
  const auto S = envelope2D(P, O);
  CHECK(S.vertices.rows() == 6);
  Matrix all(6, 2);
  all.topRows(3) = T;
  all.bottomRows(3) = (-T).rowwise() + 2.0 * O.transpose();
  CHECK(sameVertexSets(S.vertices, fixtures::zonotopePolygon(symmetricPolygonToZonotope(S)), 1e-9));
  const Polytope E = Polytope::fromPoints(S.vertices);
  for (Index i = 0; i < 6; ++i) CHECK(E.maxViolation(all.row(i).transpose()) <= 1e-9);
  Rng rng(4);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    double a = U(rng), b = U(rng);
    if (a + b > 1) a = 1 - a, b = 1 - b;
    CHECK(E.contains(vec({a, b}), 1e-12));
  }
  CHECK_THROWS_AS(envelope2D(Polytope::fromPoints(Matrix::Identity(4, 3).bottomRows(4)), vec({0, 0, 0})), Error);
}

TEST_CASE("envelope contains random polygons") {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const Polytope P = randomPolygon(rng, 3 + t % 5);
    const auto S = envelope2D(P, chooseCenter2D(P));
    const Polytope E = Polytope::fromPoints(S.vertices);
    for (Index i = 0; i < P.vertexCount(); ++i) CHECK(E.maxViolation(P.vertex(i)) <= 1e-9);
  }
}

TEST_CASE("centre search") {
  const Polytope hex = Polytope::fromPoints(regularHexagon().rowwise() + vec({0.3, -0.2}).transpose());
  const Vector O = chooseCenter2D(hex);
  CHECK((O - vec({0.3, -0.2})).norm() < 1e-9);
  CHECK(polygonArea(envelope2D(hex, O).vertices) == doctest::Approx(polygonArea(convexHull2D(hex.vertices()))));
  Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    const Polytope P = randomPolygon(rng, 3 + t % 4);
    const double bary = polygonArea(envelope2D(P, P.barycenter()).vertices);
    double prev = bary;
    for (int depth = 0; depth <= 4; ++depth) {
      const double a = polygonArea(envelope2D(P, chooseCenter2D(P, depth)).vertices);
      CHECK(a <= prev + 1e-15);
      prev = a;
    }
  }
}

TEST_CASE("symmetric polygons become zonotopes") {
  Matrix sq(4, 2);
  sq << 0, 0, 1, 0, 1, 1, 0, 1;
  const Zonotope Z = symmetricPolygonToZonotope({sq, vec({0.5, 0.5})});
  CHECK((canonicalize(Z).generators() - Matrix::Identity(2, 2).colwise().reverse()).norm() < 1e-15);
  CHECK(Z.translation().norm() < 1e-15);
  const Zonotope H = symmetricPolygonToZonotope({convexHull2D(regularHexagon()), vec({0.0, 0.0})});
  CHECK(H.rank() == 3);
  CHECK(sameVertexSets(fixtures::zonotopePolygon(H), regularHexagon(), 1e-9));
  // the pushforward hexagon with generators (1,2), (1,1), (2,0)
  Matrix Q(3, 2);
  Q << 1, 2, 1, 1, 2, 0;
  const Zonotope F(Q, Vector::Zero(2));
  const Zonotope back = symmetricPolygonToZonotope({fixtures::zonotopePolygon(F), F.center()});
  std::set<std::pair<long, long>> want{{1, 2}, {1, 1}, {2, 0}}, got;
  for (Index i = 0; i < 3; ++i) {
    Vector g = back.generators().row(i).transpose();
    if (g(0) < 0 || (g(0) == 0 && g(1) < 0)) g = -g;
    got.insert({std::lround(g(0)), std::lround(g(1))});
    CHECK((g - g.array().round().matrix()).norm() < 1e-12);
  }
  CHECK(got == want);
  CHECK(sameVertexSets(fixtures::zonotopePolygon(back), fixtures::zonotopePolygon(F), 1e-9));
  Matrix skew(4, 2);
  skew << 0, 0, 1, 0, 1.5, 1, 0, 1;
  CHECK_THROWS_AS(symmetricPolygonToZonotope({skew, vec({0.6, 0.5})}), Error);
}

TEST_CASE("planar warmstart on symmetric polygons") {
  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    const Index k = 2 + t % 3;
    const Zonotope Z = fixtures::randomSymmetricZonotope(rng, k);
    const Polytope P = asPolytope(Z);
    for (Index n = k; n <= k + 1; ++n) {
      const Zonotope W = warmstart(P, n, rng);
      CHECK(W.rank() == n);
      CHECK(isGeneralPosition(W));
      // exact with 2n edges; a padded generator of length 1e-5 diam otherwise
      CHECK(hausdorffDistance(P, W).value <= (n == k ? 1e-9 : 1e-5 * P.diameter()));
    }
  }
}

TEST_CASE("planar warmstart keeps the longest generators") {
  Rng rng(15);
  const Zonotope Z = fixtures::randomSymmetricZonotope(rng, 5);
  const Polytope P = asPolytope(Z);
  const Zonotope W = warmstart(P, 3, rng);
  Vector lens = Z.generators().rowwise().norm();
  std::sort(lens.begin(), lens.end(), std::greater<>());
  Vector got = W.generators().rowwise().norm();
  std::sort(got.begin(), got.end(), std::greater<>());
  CHECK((got - lens.head(3)).norm() < 1e-9);
  CHECK((W.center() - Z.center()).norm() < 1e-6);
}

TEST_CASE("principal-axis warmstart") {
  Matrix box(8, 3);
  for (int m = 0; m < 8; ++m) box.row(m) << (m & 1) * 2.0, ((m >> 1) & 1) * 1.0, ((m >> 2) & 1) * 0.5;
  const Polytope B = Polytope::fromPoints(box);
  Rng rng(1);
  CHECK(hausdorffDistance(B, warmstartGeneric(B, 3, rng)).value <= 1e-6);
  const Zonotope W5 = warmstartGeneric(B, 5, rng);
  const Vector lens = W5.generators().rowwise().norm();
  CHECK(lens.minCoeff() <= 0.1 * 2.0 + 1e-12);
  int small = 0;
  for (Index i = 0; i < 5; ++i)
    if (lens(i) <= 0.2 + 1e-12) ++small;
  CHECK(small >= 2);
  CHECK(isGeneralPosition(W5));
  CHECK_THROWS_AS(warmstartGeneric(B, 2, rng), Error);
}

TEST_CASE("principal-axis warmstart beats the random median in 3-D") {
  Rng rng(30);
  int wins = 0;
  for (int t = 0; t < 5; ++t) {
    const Polytope P = randomPolytope(rng, 3, 12);
    const double w = hausdorffDistance(P, warmstartGeneric(P, 4, rng)).value;
    std::vector<double> rnd;
    for (int s = 0; s < 20; ++s) rnd.push_back(hausdorffDistance(P, randomStart(P, 4, rng)).value);
    std::nth_element(rnd.begin(), rnd.begin() + 10, rnd.end());
    if (w <= rnd[10]) ++wins;
  }
  CHECK(wins == 5);
}

#include "zonofit/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace zonofit {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

Matrix matrixFrom(const json& j, const char* what) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw Error(ErrorCode::Parse, std::string(what) + " must be a non-empty array of arrays");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j.front().size());
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& r = j[static_cast<std::size_t>(i)];
    if (!r.is_array() || static_cast<Index>(r.size()) != cols)
      throw Error(ErrorCode::Parse, std::string(what) + " rows must have equal length");
    for (Index k = 0; k < cols; ++k) {
      if (!r[static_cast<std::size_t>(k)].is_number())
        throw Error(ErrorCode::Parse, std::string(what) + " entries must be numbers");
      M(i, k) = r[static_cast<std::size_t>(k)].get<double>();
    }
  }
  return M;
}

json toJson(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json toJson(const Matrix& M) {
  json a = json::array();
  for (Index i = 0; i < M.rows(); ++i) a.push_back(toJson(Vector(M.row(i).transpose())));
  return a;
}

}  // namespace

Polytope polytopeFromJson(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("vertices")) throw Error(ErrorCode::Parse, "polytope JSON needs \"vertices\"");
  const Matrix V = matrixFrom(j["vertices"], "vertices");
  if (j.contains("facets")) {
    const Matrix F = matrixFrom(j["facets"], "facets");
    if (F.cols() != V.cols() + 1) throw Error(ErrorCode::Parse, "facet rows must hold d normal entries and an offset");
    std::vector<Facet> facets;
    for (Index i = 0; i < F.rows(); ++i) facets.push_back({F.row(i).head(V.cols()).transpose(), F(i, V.cols())});
    return Polytope::fromVerticesAndFacets(V, std::move(facets));
  }
  return Polytope::fromPoints(V);
}

std::string polytopeToJson(const Polytope& P) {
  json j;
  j["vertices"] = toJson(P.vertices());
  json f = json::array();
  for (const auto& fc : P.facets()) {
    json row = toJson(fc.normal);
    row.push_back(fc.offset);
    f.push_back(row);
  }
  j["facets"] = f;
  return j.dump(2);
}

Zonotope zonotopeFromJson(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("generators"))
    throw Error(ErrorCode::Parse, "zonotope JSON needs \"generators\"");
  const Matrix G = matrixFrom(j["generators"], "generators");
  Vector mu = Vector::Zero(G.cols());
  if (j.contains("translation")) {
    const json& t = j["translation"];
    if (!t.is_array() || static_cast<Index>(t.size()) != G.cols())
      throw Error(ErrorCode::Parse, "translation length must match the generator length");
    for (Index k = 0; k < G.cols(); ++k) {
      if (!t[static_cast<std::size_t>(k)].is_number()) throw Error(ErrorCode::Parse, "translation entries must be numbers");
      mu(k) = t[static_cast<std::size_t>(k)].get<double>();
    }
  }
  return Zonotope(G, mu);
}

std::string zonotopeToJson(const Zonotope& Z) {
  json j;
  j["generators"] = toJson(Z.generators());
  j["translation"] = toJson(Z.translation());
  return j.dump(2);
}

std::string distanceReportJson(const DistanceResult& result, bool coarse) {
  json j;
  j["kind"] = coarse ? "coarse" : "exact";
  j["value"] = result.value;
  json pairs = json::array();
  for (const auto& pr : result.pairs) {
    json e;
    e["side"] = pairSideName(pr.side);
    e["vertex"] = pr.vertexId;
    e["p"] = toJson(pr.p);
    e["q"] = toJson(pr.q);
    e["lift"] = toJson(pr.lift.coords);
    e["free"] = pr.lift.freeIndices;
    e["distance"] = pr.distance;
    e["face_codim"] = pr.face.codim();
    pairs.push_back(e);
  }
  j["pairs"] = pairs;
  return j.dump(2);
}

std::string traceToCsv(const DescentTrace& trace) {
  std::ostringstream os;
  os << "iter,d_exact,d_coarse,step,rule,active_pairs,cone_status,ms\n";
  os << std::setprecision(17);
  for (const auto& r : trace.records) {
    os << r.iter << ',' << r.dExact << ',' << r.dCoarse << ',' << r.step << ',' << r.rule << ','
       << r.activePairs << ',' << r.coneStatus << ',' << std::setprecision(6) << r.ms << std::setprecision(17)
       << '\n';
  }
  return os.str();
}

std::string renderSvg(const Polytope& P, const Zonotope& Z, const std::vector<AchievingPair>& pairs) {
  if (P.dim() != 2 || Z.dim() != 2) throw Error(ErrorCode::DimensionNot2, "plots are planar only");
  const Matrix pPoly = convexHull2D(P.vertices());
  const auto zv = enumerateVertices(Z);
  Matrix zPts(static_cast<Index>(zv.size()), 2);
  for (std::size_t k = 0; k < zv.size(); ++k) zPts.row(static_cast<Index>(k)) = zv[k].point.transpose();
  const Matrix zPoly = convexHull2D(zPts);

  Eigen::Vector2d lo = pPoly.colwise().minCoeff().transpose();
  Eigen::Vector2d hi = pPoly.colwise().maxCoeff().transpose();
  lo = lo.cwiseMin(Eigen::Vector2d(zPoly.colwise().minCoeff().transpose()));
  hi = hi.cwiseMax(Eigen::Vector2d(zPoly.colwise().maxCoeff().transpose()));
  const double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-12});
  const double size = 480.0;
  const double margin = 20.0;
  auto X = [&](double x) { return margin + (x - lo.x()) / span * size; };
  auto Y = [&](double y) { return margin + (hi.y() - y) / span * size; };
  auto path = [&](const Matrix& poly) {
    std::ostringstream s;
    s << std::setprecision(8);
    for (Index i = 0; i < poly.rows(); ++i) {
      if (i) s << ' ';
      s << X(poly(i, 0)) << ',' << Y(poly(i, 1));
    }
    return s.str();
  };

  std::ostringstream os;
  os << std::setprecision(8);
  const double w = size + 2 * margin;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << w << "\" viewBox=\"0 0 " << w
     << ' ' << w << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "  <polygon class=\"polytope\" points=\"" << path(pPoly) << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n"
     << "  <polygon class=\"zonotope\" points=\"" << path(zPoly) << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";
  for (const auto& pr : pairs) {
    os << "  <g class=\"pair\">"
       << "<line x1=\"" << X(pr.p(0)) << "\" y1=\"" << Y(pr.p(1)) << "\" x2=\"" << X(pr.q(0)) << "\" y2=\"" << Y(pr.q(1))
       << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>"
       << "<circle cx=\"" << X(pr.p(0)) << "\" cy=\"" << Y(pr.p(1)) << "\" r=\"3\" fill=\"black\"/>"
       << "<circle cx=\"" << X(pr.q(0)) << "\" cy=\"" << Y(pr.q(1)) << "\" r=\"3\" fill=\"black\"/>"
       << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

Polytope randomPolygon(Rng& rng, int m) {
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "a polygon needs at least three points");
  std::uniform_real_distribution<double> U(0.0, 1.0);
  Matrix pts(m, 2);
  for (int i = 0; i < m; ++i) {
    const double angle = 2.0 * M_PI * (i + 0.8 * U(rng)) / m;
    const double radius = 0.7 + 0.6 * U(rng);
    pts(i, 0) = radius * std::cos(angle);
    pts(i, 1) = radius * std::sin(angle);
  }
  return Polytope::fromPoints(convexHull2D(pts));
}

Polytope randomPolytope(Rng& rng, Index d, int m) {
  if (d == 2) return randomPolygon(rng, m);
  std::normal_distribution<double> N(0.0, 1.0);
  Matrix pts(m, d);
  for (Index k = 0; k < pts.size(); ++k) pts(k) = N(rng);
  return Polytope::fromPoints(pts);
}

Zonotope randomZonotope(Rng& rng, Index n, Index d) {
  std::normal_distribution<double> N(0.0, 1.0);
  while (true) {
    Matrix G(n, d);
    for (Index k = 0; k < G.size(); ++k) G(k) = N(rng);
    Vector mu(d);
    for (Index j = 0; j < d; ++j) mu(j) = N(rng);
    Zonotope Z(G, mu);
    if (isGeneralPosition(Z, 1e-3)) return canonicalize(Z);
  }
}

}  // namespace zonofit

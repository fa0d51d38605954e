#include "valgeo/body_io.hpp"

#include <cmath>
#include <fstream>

#include "valgeo/rng.hpp"

namespace valgeo {

Polytope make_cube(int dim, double side) {
  std::vector<Vec> pts;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Vec v(dim);
    for (int d = 0; d < dim; ++d) v(d) = (mask & (1u << d)) ? side : 0.0;
    pts.push_back(v);
  }
  return Polytope::hull(pts, dim);
}

Polytope make_simplex(int dim, double s) {
  std::vector<Vec> pts = {Vec(Vec::Zero(dim))};
  for (int d = 0; d < dim; ++d) {
    Vec v = Vec::Zero(dim);
    v(d) = s;
    pts.push_back(v);
  }
  return Polytope::hull(pts, dim);
}

Polytope make_crosspolytope(int dim, double s) {
  std::vector<Vec> pts;
  for (int d = 0; d < dim; ++d)
    for (double sgn : {1.0, -1.0}) {
      Vec v = Vec::Zero(dim);
      v(d) = sgn * s;
      pts.push_back(v);
    }
  return Polytope::hull(pts, dim);
}

Polytope make_ball_approx(int dim, int facets, double radius, bool circumscribed) {
  if (facets < dim + 1) throw BodyParseError("ball-approx needs at least dim+1 facets");
  std::vector<Vec> pts;
  if (dim == 2) {
    for (int i = 0; i < facets; ++i) {
      double t = 2.0 * M_PI * i / facets;
      Vec v(2);
      v << radius * std::cos(t), radius * std::sin(t);
      pts.push_back(v);
    }
  } else if (dim == 3) {
    // Fibonacci sphere points.
    double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int i = 0; i < facets; ++i) {
      double z = 1.0 - 2.0 * (i + 0.5) / facets;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double t = 2.0 * M_PI * i / golden;
      Vec v(3);
      v << radius * r * std::cos(t), radius * r * std::sin(t), radius * z;
      pts.push_back(v);
    }
  } else {
    // Deterministic quasi-uniform sphere points via a fixed-seed stream.
    RngStream rng(0x5ba11u, static_cast<std::uint64_t>(dim));
    for (int i = 0; i < facets; ++i) {
      Vec v(dim);
      for (int d = 0; d < dim; ++d) v(d) = rng.gaussian();
      pts.push_back(radius * v / v.norm());
    }
  }
  Polytope inscribed = Polytope::hull(pts, dim);
  if (!circumscribed) return inscribed;
  // Scale so the true ball is contained: divide by the inradius ratio.
  double rin = radius;
  for (const auto& f : to_halfspaces(inscribed).rows) rin = std::min(rin, f.offset);
  return scale(inscribed, radius / rin);
}

Polytope body_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("gen")) {
      std::string gen = j.at("gen").get<std::string>();
      int dim = j.at("dim").get<int>();
      double s = j.value("scale", 1.0);
      if (gen == "cube") return make_cube(dim, s);
      if (gen == "simplex") return make_simplex(dim, s);
      if (gen == "crosspolytope") return make_crosspolytope(dim, s);
      if (gen == "ball-approx")
        return make_ball_approx(dim, j.value("facets", 64), s,
                                j.value("variant", std::string("inscribed")) ==
                                    "circumscribed");
      throw BodyParseError("unknown generator '" + gen + "'");
    }
    int dim = j.at("dim").get<int>();
    std::vector<Vec> pts;
    for (const auto& row : j.at("vertices")) {
      if (static_cast<int>(row.size()) != dim)
        throw BodyParseError("vertex arity does not match dim");
      Vec v(dim);
      for (int d = 0; d < dim; ++d) v(d) = row.at(d).get<double>();
      pts.push_back(v);
    }
    return Polytope::hull(pts, dim);
  } catch (const nlohmann::json::exception& e) {
    throw BodyParseError(std::string("malformed body JSON: ") + e.what());
  }
}

Polytope body_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BodyParseError("cannot open body file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw BodyParseError("parse error in '" + path + "': " + e.what());
  }
  return body_from_json(j);
}

nlohmann::json body_to_json(const Polytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    nlohmann::json row = nlohmann::json::array();
    for (int d = 0; d < p.dim(); ++d) row.push_back(v(d));
    j["vertices"].push_back(row);
  }
  return j;
}

}  // namespace valgeo

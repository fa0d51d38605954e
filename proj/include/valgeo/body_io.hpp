#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "valgeo/polytope.hpp"

namespace valgeo {

struct BodyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Body JSON: {"dim": n, "vertices": [[x1..xn], ...]} or a named generator
// {"gen": "cube"|"simplex"|"crosspolytope"|"ball-approx", "dim": n,
//  "scale": t, "facets": f, "variant": "inscribed"|"circumscribed"}.
Polytope body_from_json(const nlohmann::json& j);
Polytope body_from_file(const std::string& path);
nlohmann::json body_to_json(const Polytope& p);

// Generators, also usable directly.
Polytope make_cube(int dim, double side = 1.0);
Polytope make_simplex(int dim, double scale = 1.0);
Polytope make_crosspolytope(int dim, double scale = 1.0);
// Inscribed polytope approximant of the radius-`radius` ball with roughly
// `facets` boundary elements; circumscribed variant rescales so that the
// ball fits inside.
Polytope make_ball_approx(int dim, int facets, double radius = 1.0,
                          bool circumscribed = false);

}  // namespace valgeo

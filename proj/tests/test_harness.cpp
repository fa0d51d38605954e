#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "valgeo/harness.hpp"
#include "valgeo/rng.hpp"
#include "valgeo/sampling.hpp"
#include "valgeo/valuations.hpp"

using namespace valgeo;

namespace {

Polytope unit_cube(int dim) {
  std::vector<Vec> pts;
  for (int m = 0; m < (1 << dim); ++m) {
    Vec p(dim);
    for (int d = 0; d < dim; ++d) p[d] = (m >> d) & 1;
    pts.push_back(p);
  }
  return Polytope::hull(pts, dim);
}

Polytope right_triangle() {
  Vec a(2), b(2), c(2);
  a << 0, 0;
  b << 1, 0;
  c << 0, 1;
  return Polytope::hull({a, b, c}, 2);
}

Polytope random_polytope(RngStream& rng, int dim, int count = 10) {
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) {
    Vec p(dim);
    for (int d = 0; d < dim; ++d) p[d] = rng.uniform(-1.0, 1.0);
    pts.push_back(p);
  }
  return Polytope::hull(pts, dim);
}

}  // namespace

TEST_CASE("exact intrinsic volumes vs the Kubota estimator, random 3D bodies") {
  RngStream rng(301);
  for (int trial = 0; trial < 10; ++trial) {
    Polytope p = random_polytope(rng, 3);
    auto exact = intrinsic_volumes_exact(p);
    auto est = intrinsic_volumes_mc(p, 8000, rng.substream(trial));
    for (int k = 0; k <= 3; ++k) {
      INFO("trial ", trial, " k=", k);
      double tol = 5.0 * est.stderrs[k] + 1e-9;
      CHECK(std::abs(est.values[k] - exact[k]) < tol);
    }
  }
}

TEST_CASE("intersection kinematic formula, squares in the plane") {
  Polytope sq = unit_cube(2);
  // Exact: chi prediction 2 + 8/pi from the k=0 kinematic tensor.
  auto tensors = build_tables(2);
  double pred0 = tensor_prediction(tensors.kinematic[0], sq, sq);
  CHECK(pred0 == doctest::Approx(2.0 + 8.0 / M_PI));
  for (int k = 0; k <= 2; ++k) {
    double pred = tensor_prediction(tensors.kinematic[k], sq, sq);
    auto est = intersection_kinematic_mc(k, sq, sq, 40000, RngStream(302 + k));
    INFO("k=", k, " est=", est.value, " pred=", pred);
    CHECK(est.z_score(pred) < 4.0);
  }
}

TEST_CASE("intersection kinematic formula, square against triangle") {
  Polytope sq = unit_cube(2);
  Polytope tri = right_triangle();
  auto tensors = build_tables(2);
  for (int k = 0; k <= 2; ++k) {
    double pred = tensor_prediction(tensors.kinematic[k], sq, tri);
    auto est = intersection_kinematic_mc(k, sq, tri, 40000, RngStream(305 + k));
    CHECK(est.z_score(pred) < 4.0);
  }
}

TEST_CASE("additive kinematic formula in the plane") {
  Polytope sq = unit_cube(2);
  auto tensors = build_tables(2);
  // k=1: mu_1(A + gB) = mu_1(A) + mu_1(B) = 4 identically, zero variance.
  auto est1 = additive_kinematic_mc(1, sq, sq, 2000, RngStream(310));
  CHECK(est1.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(est1.stderr_ < 1e-10);
  // k=2: E[area(A + gB)] = 2 + 8/pi.
  auto est2 = additive_kinematic_mc(2, sq, sq, 40000, RngStream(311));
  double pred = tensor_prediction(tensors.additive[2], sq, sq);
  CHECK(pred == doctest::Approx(2.0 + 8.0 / M_PI));
  CHECK(est2.z_score(pred) < 4.0);
}

TEST_CASE("additive kinematic formula for cubes in 3-space") {
  Polytope cube = unit_cube(3);
  auto tensors = build_tables(3);
  for (int k : {2, 3}) {
    double pred = tensor_prediction(tensors.additive[k], cube, cube);
    auto est = additive_kinematic_mc(k, cube, cube, 4000, RngStream(312 + k));
    INFO("k=", k, " est=", est.value, " pred=", pred);
    CHECK(est.z_score(pred) < 4.0);
  }
}

TEST_CASE("identity suite passes and is deterministic") {
  std::vector<NamedBody> bodies = {{"square", unit_cube(2)}, {"triangle", right_triangle()}};
  SuiteOptions opts;
  opts.samples = 20000;
  auto r1 = run_identity_suite(2, bodies, RngStream(313), opts);
  auto r2 = run_identity_suite(2, bodies, RngStream(313), opts);
  CHECK(r1.pass);
  REQUIRE(r1.items.size() == r2.items.size());
  for (std::size_t i = 0; i < r1.items.size(); ++i) {
    CHECK(r1.items[i].estimate == r2.items[i].estimate);
    CHECK(r1.items[i].stderr_ == r2.items[i].stderr_);
  }
  CHECK(r1.to_json().find("\"pass\"") != std::string::npos);
}

TEST_CASE("identity suite notices a corrupted tensor entry") {
  std::vector<NamedBody> bodies = {{"square", unit_cube(2)}};
  SuiteOptions opts;
  opts.samples = 30000;
  opts.run_convolution = false;
  opts.perturb = SuitePerturbation{SuitePerturbation::kKinematicTable, 0, 1, 1, 1.05};
  auto r = run_identity_suite(2, bodies, RngStream(314), opts);
  CHECK(!r.pass);
  opts.perturb = SuitePerturbation{SuitePerturbation::kAdditiveTable, 2, 1, 1, 1.05};
  opts.run_intersection = false;
  opts.run_additive = true;
  auto r2 = run_identity_suite(2, bodies, RngStream(314), opts);
  CHECK(!r2.pass);
}

TEST_CASE("stderr shrinks like one over sqrt(samples)") {
  Polytope sq = unit_cube(2);
  auto small = intersection_kinematic_mc(0, sq, sq, 10000, RngStream(315));
  auto big = intersection_kinematic_mc(0, sq, sq, 40000, RngStream(315));
  CHECK(big.stderr_ == doctest::Approx(small.stderr_ / 2.0).epsilon(0.15));
}

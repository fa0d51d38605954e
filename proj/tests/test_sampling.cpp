#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "valgeo/mc.hpp"
#include "valgeo/polytope.hpp"
#include "valgeo/sampling.hpp"

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

Polytope standard_simplex(int dim) {
  std::vector<Vec> pts = {Vec::Zero(dim)};
  for (int d = 0; d < dim; ++d) {
    Vec p = Vec::Zero(dim);
    p[d] = 1.0;
    pts.push_back(p);
  }
  return Polytope::hull(pts, dim);
}

}  // namespace

TEST_CASE("haar_rotation produces proper rotations") {
  RngStream rng(101);
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 50; ++i) {
      Rotation r = haar_rotation(rng, n);  // ctor validates orthogonality
      CHECK(std::abs(r.matrix.determinant() - 1.0) < 1e-9);
      CHECK((r.matrix.transpose() * r.matrix - Mat::Identity(n, n)).norm() < 1e-9);
    }
  }
}

TEST_CASE("haar_rotation entries have zero mean (invariance smoke test)") {
  const long n_samples = 20000;
  for (int n : {2, 3}) {
    double mean00 = 0.0, mean01 = 0.0;
    RngStream rng(102);
    for (long i = 0; i < n_samples; ++i) {
      Rotation r = haar_rotation(rng, n);
      mean00 += r.matrix(0, 0);
      mean01 += r.matrix(0, 1);
    }
    mean00 /= n_samples;
    mean01 /= n_samples;
    // Var of an entry is 1/n; 4 sigma band.
    double band = 4.0 / std::sqrt(static_cast<double>(n) * n_samples);
    CHECK(std::abs(mean00) < band);
    CHECK(std::abs(mean01) < band);
  }
}

TEST_CASE("sampling is reproducible from the seed") {
  RngStream a(55), b(55), c(56);
  Rotation ra = haar_rotation(a, 3);
  Rotation rb = haar_rotation(b, 3);
  Rotation rc = haar_rotation(c, 3);
  CHECK((ra.matrix - rb.matrix).norm() == 0.0);
  CHECK((ra.matrix - rc.matrix).norm() > 1e-6);
}

TEST_CASE("uniform_grassmannian frames are orthonormal") {
  RngStream rng(103);
  for (int n : {3, 4})
    for (int k = 1; k < n; ++k)
      for (int i = 0; i < 20; ++i) {
        Mat f = uniform_grassmannian(rng, k, n);
        REQUIRE(f.rows() == n);
        REQUIRE(f.cols() == k);
        CHECK((f.transpose() * f - Mat::Identity(k, k)).norm() < 1e-10);
      }
}

TEST_CASE("grassmannian lines reproduce E|cos| = 2/pi for a segment") {
  // The projection of a unit segment onto a uniform line in R^2 has expected
  // length 2/pi, the classical Cauchy mean-projection value.
  Vec a = Vec::Zero(2), b = Vec::Zero(2);
  b[0] = 1.0;
  auto est = mc_estimate(
      50000, RngStream(104),
      [&](RngStream& rng) {
        Mat line = uniform_grassmannian(rng, 1, 2);
        return std::abs(line.col(0).dot(b - a));
      },
      1);
  CHECK(est.z_score(2.0 / M_PI) < 4.0);
}

TEST_CASE("mc_estimate is independent of the thread count") {
  auto fn = [](RngStream& rng) { return rng.uniform() * rng.uniform(); };
  auto e1 = mc_estimate(20000, RngStream(9), fn, 1);
  auto e4 = mc_estimate(20000, RngStream(9), fn, 4);
  CHECK(e1.value == e4.value);
  CHECK(e1.stderr_ == e4.stderr_);
  CHECK(e1.z_score(0.25) < 4.0);
  // stderr shrinks like 1/sqrt(n).
  auto e_big = mc_estimate(80000, RngStream(9), fn, 2);
  CHECK(e_big.stderr_ == doctest::Approx(e1.stderr_ / 2.0).epsilon(0.1));
}

TEST_CASE("uniform_in_polytope: membership and first moments") {
  Polytope simplex = standard_simplex(3);
  PolytopeSampler sampler(simplex);
  CHECK(sampler.box_volume() == doctest::Approx(1.0));
  auto h = to_halfspaces(simplex);
  RngStream rng(105);
  double mean_sum = 0.0;
  const long n = 20000;
  for (long i = 0; i < n; ++i) {
    Vec x = sampler.sample(rng);
    CHECK(contains(h, x));
    mean_sum += x.sum();
  }
  // E[x1+x2+x3] = 3/4 on the standard simplex.
  mean_sum /= n;
  CHECK(mean_sum == doctest::Approx(0.75).epsilon(0.02));
}

TEST_CASE("uniform_in_polytope covers the cube evenly") {
  Polytope cube = unit_cube(2);
  RngStream rng(106);
  int quad[4] = {0, 0, 0, 0};
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    Vec x = uniform_in_polytope(rng, cube);
    quad[(x[0] > 0.5) + 2 * (x[1] > 0.5)] += 1;
  }
  for (int q = 0; q < 4; ++q)
    CHECK(std::abs(quad[q] - n / 4.0) < 5.0 * std::sqrt(n * 0.25 * 0.75));
}

TEST_CASE("PolytopeSampler rejects degenerate bodies") {
  Vec a = Vec::Zero(2), b = Vec::Zero(2);
  b[0] = 1.0;
  Polytope segment = Polytope::hull({a, b}, 2);
  CHECK_THROWS(PolytopeSampler(segment));
}

// Acceptance gate: one line of output per criterion, nonzero exit if any
// criterion fails. Tolerances and sample counts are pinned here on purpose.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "valgeo/algebra.hpp"
#include "valgeo/body_io.hpp"
#include "valgeo/harness.hpp"
#include "valgeo/rng.hpp"
#include "valgeo/sampling.hpp"
#include "valgeo/valuations.hpp"

using namespace valgeo;

namespace {

int g_failures = 0;

double now_seconds() {
  static auto t0 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& what, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

Polytope random_polytope(RngStream& rng, int dim, int count = 8) {
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) {
    Vec p(dim);
    for (int d = 0; d < dim; ++d) p[d] = rng.uniform(-1.0, 1.0);
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

long binom_l(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// 1. Exact identity suite over ScaledRational for n = 2, 3, 4 in under 5 s.
void criterion1() {
  double t0 = now_seconds();
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 4; ++n)
    for (const auto& r : verify_all(n))
      if (!r.pass) {
        pass = false;
        detail += " " + r.identity + "(n=" + std::to_string(n) + ")";
      }
  double dt = now_seconds() - t0;
  if (dt >= 5.0) pass = false;
  report(1, pass, "exact identity suite n=2,3,4, zero tolerance" + detail, dt);
}

// 2. Convolution of Minkowski valuations on random triples, rel err < 1e-6.
void criterion2() {
  double t0 = now_seconds();
  RngStream rng(2026);
  bool pass = true;
  auto run = [&](int dim, int trials) {
    for (int i = 0; i < trials; ++i) {
      Polytope a = random_polytope(rng, dim);
      Polytope b = random_polytope(rng, dim);
      Polytope k = random_polytope(rng, dim);
      double lhs = formal_evaluate(formal_convolve(mu_A_expand(a), mu_A_expand(b)), k);
      double rhs = volume(minkowski_sum(minkowski_sum(a, b), k));
      if (std::abs(lhs - rhs) / rhs >= 1e-6) pass = false;
    }
  };
  run(2, 20);
  run(3, 10);
  double dt = now_seconds() - t0;
  if (dt >= 30.0) pass = false;
  report(2, pass, "mu_A * mu_B = mu_{A+B} on 20 planar + 10 spatial triples, rel err < 1e-6",
         dt);
}

// 3. Convolution coefficients binom(k+l,n)/binom(k+l,k), cross-checked by
//    evaluation on 5 bodies.
void criterion3() {
  double t0 = now_seconds();
  RngStream rng(3033);
  bool pass = true;
  for (int n : {2, 3}) {
    Polytope a = random_polytope(rng, n);
    Polytope b = random_polytope(rng, n);
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        FormalValuation phi{n, {{1.0, std::vector<Polytope>(n - k, a)}}};
        FormalValuation psi{n, {{1.0, std::vector<Polytope>(n - l, b)}}};
        auto conv = formal_convolve(phi, psi);
        if (k + l < n) {
          if (!conv.terms.empty()) pass = false;
          continue;
        }
        double want = static_cast<double>(binom_l(k + l, n)) /
                      static_cast<double>(binom_l(k + l, k));
        if (conv.terms.size() != 1 ||
            std::abs(conv.terms[0].coeff - want) > 1e-12 * want)
          pass = false;
        // Evaluate both sides on 5 bodies K: the convolution term against
        // the explicit mixed volume with the same coefficient.
        for (int trial = 0; trial < 5; ++trial) {
          Polytope kk = random_polytope(rng, n);
          double lhs = formal_evaluate(conv, kk);
          std::vector<Polytope> args(k + l - n, kk);
          for (int m = 0; m < n - k; ++m) args.push_back(a);
          for (int m = 0; m < n - l; ++m) args.push_back(b);
          double rhs = want * mixed_volume(args);
          double denom = std::max(std::abs(rhs), 1e-12);
          if (std::abs(lhs - rhs) / denom >= 1e-6) pass = false;
        }
      }
  }
  double dt = now_seconds() - t0;
  report(3, pass, "convolution coefficients binom(k+l,n)/binom(k+l,k), 5-body cross-check",
         dt);
}

// 4. Intersection kinematic formula, n = 2.
void criterion4() {
  double t0 = now_seconds();
  Polytope sq = make_cube(2);
  Polytope tri = right_triangle();
  auto tables = build_tables(2);
  bool pass = true;

  // Headline run: k = 0, square/square, 1e6 samples, stderr < 0.01, < 60 s.
  double head0 = now_seconds();
  auto est = intersection_kinematic_mc(0, sq, sq, 1000000, RngStream(4001));
  double head_dt = now_seconds() - head0;
  double pred = tensor_prediction(tables.kinematic[0], sq, sq);  // 2 + 8/pi
  if (std::abs(pred - (2.0 + 8.0 / M_PI)) > 1e-12) pass = false;
  if (est.z_score(pred) > 4.0 || est.stderr_ >= 0.01 || head_dt >= 60.0) pass = false;

  // Remaining degrees and the square/triangle pair.
  long n_rest = 200000;
  int stream = 0;
  for (int k = 0; k <= 2; ++k) {
    for (const Polytope* b : {&sq, &tri}) {
      if (k == 0 && b == &sq) continue;
      auto e = intersection_kinematic_mc(k, sq, *b, n_rest, RngStream(4100 + ++stream));
      double p = tensor_prediction(tables.kinematic[k], sq, *b);
      if (e.stderr_ <= 1e-12) {
        if (std::abs(e.value - p) > 1e-9 * std::max(1.0, std::abs(p))) pass = false;
      } else if (e.z_score(p) > 4.0) {
        pass = false;
      }
    }
  }
  report(4, pass,
         "intersection kinematic, square/square chi = 2+8/pi at 1e6 samples; "
         "k=0,1,2 and square/triangle within 4 sigma",
         now_seconds() - t0);
}

// 5. Additive kinematic formula.
void criterion5() {
  double t0 = now_seconds();
  auto t2 = build_tables(2);
  Polytope sq = make_cube(2);
  bool pass = true;

  auto e2 = additive_kinematic_mc(2, sq, sq, 200000, RngStream(5001));
  if (e2.z_score(tensor_prediction(t2.additive[2], sq, sq)) > 4.0) pass = false;

  auto e1 = additive_kinematic_mc(1, sq, sq, 10000, RngStream(5002));
  if (std::abs(e1.value - 4.0) > 1e-9 || e1.stderr_ >= 1e-10) pass = false;

  double t3d = now_seconds();
  auto t3 = build_tables(3);
  Polytope cube = make_cube(3);
  for (int k : {2, 3}) {
    auto e = additive_kinematic_mc(k, cube, cube, 100000, RngStream(5100 + k));
    if (e.z_score(tensor_prediction(t3.additive[k], cube, cube)) > 4.0) pass = false;
  }
  if (now_seconds() - t3d >= 120.0) pass = false;
  report(5, pass,
         "additive kinematic: planar k=2 within 4 sigma, k=1 exactly 4 "
         "(stderr < 1e-10); cube/cube k=2,3 at 1e5 samples",
         now_seconds() - t0);
}

// 6. Kubota intrinsic-volume estimator.
void criterion6() {
  double t0 = now_seconds();
  bool pass = true;
  Polytope cube = make_cube(3);
  auto est = intrinsic_volumes_mc(cube, 100000, RngStream(6001));
  double expect[4] = {1.0, 3.0, 3.0, 1.0};
  for (int k = 0; k <= 3; ++k) {
    double err = std::abs(est.values[k] - expect[k]);
    if (err > 3.0 * est.stderrs[k] + 1e-12) pass = false;
    if (err / expect[k] >= 0.005) pass = false;
  }
  Polytope disk = make_ball_approx(2, 512);
  auto dest = intrinsic_volumes_mc(disk, 100000, RngStream(6002));
  if (std::abs(dest.values[1] - M_PI) / M_PI >= 0.005) pass = false;
  report(6, pass,
         "intrinsic volumes: cube (1,3,3,1) within 3 stderr and 0.5%; "
         "512-gon disk mu_1 = pi within 0.5%",
         now_seconds() - t0);
}

// 7. Klain function of the degree-k part of mu_A vs projection volumes.
void criterion7() {
  double t0 = now_seconds();
  RngStream rng(7001);
  bool pass = true;
  int planes = 0;
  for (int n : {2, 3}) {
    Polytope half = random_polytope(rng, n, 7);
    std::vector<Vec> sym = half.vertices();
    for (const auto& v : half.vertices()) sym.push_back(-v);
    Polytope a = Polytope::hull(sym, n);  // origin-symmetric
    FormalValuation mu_a = mu_A_expand(a);
    for (int k = 1; k < n; ++k) {
      auto part = mu_a.graded_part(k);
      int trials = (n == 2) ? 8 : 6;
      for (int trial = 0; trial < trials; ++trial, ++planes) {
        Mat frame = uniform_grassmannian(rng, k, n);
        double kl = klain_eval(part, frame);
        // Complement-projection volume: width along the normal line when
        // n-k = 1, polygon area when n-k = 2.
        Eigen::HouseholderQR<Mat> qr(frame);
        Mat comp = Mat(qr.householderQ()).rightCols(n - k);
        double ref;
        if (n - k == 1) {
          double lo = 1e300, hi = -1e300;
          for (const auto& v : a.vertices()) {
            double s = comp.col(0).dot(v);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
          }
          ref = hi - lo;
        } else {
          ref = volume(project(a, comp));
        }
        if (std::abs(kl - ref) >= 1e-3) pass = false;
      }
    }
  }
  report(7, pass,
         "Klain function of deg-k part of mu_A equals vol of the complement "
         "projection on " + std::to_string(planes) + " random planes",
         now_seconds() - t0);
}

// 8. Corrupting any single structure constant by 5% must trip the suite.
void criterion8() {
  double t0 = now_seconds();
  bool pass = true;
  const ScaledRational bump(21, 20);
  for (int n = 2; n <= 4; ++n) {
    auto base = build_tables(n);
    // Every nonzero convolution constant.
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (base.conv[i][j].is_zero()) continue;
        auto t = base;
        t.conv[i][j] = bump * t.conv[i][j];
        bool caught = false;
        for (const auto& r : verify_all(t))
          if (!r.pass) caught = true;
        if (!caught) pass = false;
      }
    // Every nonzero kinematic and additive tensor entry.
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          if (!base.kinematic[k].entries[i][j].is_zero()) {
            auto t = base;
            t.kinematic[k].entries[i][j] = bump * t.kinematic[k].entries[i][j];
            bool caught = false;
            for (const auto& r : verify_all(t))
              if (!r.pass) caught = true;
            if (!caught) pass = false;
          }
          if (!base.additive[k].entries[i][j].is_zero()) {
            auto t = base;
            t.additive[k].entries[i][j] = bump * t.additive[k].entries[i][j];
            bool caught = false;
            for (const auto& r : verify_all(t))
              if (!r.pass) caught = true;
            if (!caught) pass = false;
          }
        }
  }
  // The Monte Carlo suite also notices a corrupted tensor entry.
  SuiteOptions opts;
  opts.samples = 30000;
  opts.run_convolution = false;
  opts.run_additive = false;
  opts.perturb = SuitePerturbation{SuitePerturbation::kKinematicTable, 0, 1, 1, 1.05};
  std::vector<NamedBody> bodies = {{"square", make_cube(2)}};
  if (run_identity_suite(2, bodies, RngStream(8001), opts).pass) pass = false;
  report(8, pass, "every structure constant is load-bearing under a 5% bump",
         now_seconds() - t0);
}

}  // namespace

int main() {
  now_seconds();  // start the clock
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valgeo/algebra.hpp"
#include "valgeo/mc.hpp"
#include "valgeo/polytope.hpp"

namespace valgeo {

// Exact intrinsic-volume vector (closed polygon/polyhedron formulas, n = 2, 3).
std::vector<double> intrinsic_volumes_exact(const Polytope& p);

// MC estimate of int_{SO(n) x R^n} mu_k(A cap (gB + x)) dx dg with Haar
// probability on rotations and Lebesgue on translations. The translation
// integral is importance-represented over the support body A + (-gB).
Estimate intersection_kinematic_mc(int k, const Polytope& a, const Polytope& b,
                                   long samples, const RngStream& rng, int threads = 0);

// MC estimate of int_{SO(n)} mu_k(A + gB) dg (rotations only).
Estimate additive_kinematic_mc(int k, const Polytope& a, const Polytope& b, long samples,
                               const RngStream& rng, int threads = 0);

// Exact tensor predictions sum_ij T_ij mu_i(A) mu_j(B), evaluated in doubles.
double tensor_prediction(const KinematicTensor& t, const Polytope& a, const Polytope& b);

struct NamedBody {
  std::string name;
  Polytope body;
};

struct SuitePerturbation {
  enum Table { kKinematicTable, kAdditiveTable } table;
  int k = 0, i = 0, j = 0;
  double factor = 1.0;
};

struct SuiteOptions {
  long samples = 100000;
  double z_max = 4.0;
  int threads = 0;
  std::optional<SuitePerturbation> perturb;
  bool run_intersection = true;
  bool run_additive = true;
  bool run_convolution = true;  // Minkowski-convolution numeric checks
};

struct SuiteItem {
  std::string identity;
  int degree = -1;
  std::string bodies;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double prediction = 0.0;
  double z = 0.0;
  bool exact_check = false;  // pass/fail by relative tolerance, not z-score
  double rel_err = 0.0;
  bool pass = false;
};

struct VerificationReport {
  int dim = 0;
  std::uint64_t seed = 0;
  long samples = 0;
  double z_max = 4.0;
  std::vector<SuiteItem> items;
  bool pass = false;
  std::string to_json() const;
};

// Runs every (degree, body-pair) combination of the intersection and additive
// kinematic formulas against the exact tensors, plus the Minkowski
// convolution identity mu_A * mu_B = mu_{A+B} on body triples.
VerificationReport run_identity_suite(int n, const std::vector<NamedBody>& bodies,
                                      const RngStream& rng, const SuiteOptions& opts = {});

}  // namespace valgeo

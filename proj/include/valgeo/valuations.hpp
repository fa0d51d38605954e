#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "valgeo/mc.hpp"
#include "valgeo/polytope.hpp"
#include "valgeo/rng.hpp"

namespace valgeo {

// Finite linear combination of mixed-volume generators: each term denotes
// the valuation K -> coeff * V(K[k]; bodies), of degree k = n - #bodies.
struct FormalValuation {
  struct Term {
    double coeff;
    std::vector<Polytope> bodies;
  };
  int dim = 0;
  std::vector<Term> terms;

  int term_degree(const Term& t) const { return dim - static_cast<int>(t.bodies.size()); }
  // Degree of a homogeneous valuation; throws for mixed degrees.
  int homogeneous_degree() const;
  FormalValuation graded_part(int k) const;
};

// Intrinsic-volume vector with per-entry standard errors (0 when exact).
struct IntrinsicVector {
  int dim = 0;
  std::vector<double> values;
  std::vector<double> stderrs;
};

// Mixed volume V(A_1,...,A_n) by inclusion-exclusion over Minkowski sums of
// subsets; exact (up to float rounding) for polytopes.
double mixed_volume(const std::vector<Polytope>& bodies);

// Kubota estimator: mu_k(P) = flag(n,k) E_L[ vol_k(pi_L P) ] over invariant
// k-planes, 1 <= k <= n-1; mu_0 and mu_n are exact.
IntrinsicVector intrinsic_volumes_mc(const Polytope& p, long samples, const RngStream& rng,
                                     int threads = 0);

// mu_k(box) = k-th elementary symmetric polynomial of the side lengths.
IntrinsicVector intrinsic_volumes_box(const std::vector<double>& sides);

// mu_A(K) = vol(A + K).
double mu_A_eval(const Polytope& a, const Polytope& k);

// mu_A = sum_k binom(n,k) V(.[k]; A,...,A), via the Steiner-type expansion
// vol(K+A) = sum_k binom(n,k) V(K[k], A[n-k]).
FormalValuation mu_A_expand(const Polytope& a);

double formal_evaluate(const FormalValuation& phi, const Polytope& k);

struct ConvolveStats {
  long dropped_pairs = 0;  // term pairs with k+l < n contribute zero
};

// Mixed-volume convolution: degree drops by n, coefficient picks up
// binom(k+l,n) / binom(k+l,k).
FormalValuation formal_convolve(const FormalValuation& phi, const FormalValuation& psi,
                                ConvolveStats* stats = nullptr);

// Klain function of a homogeneous degree-k valuation at L = span(frame),
// evaluated on the unit k-cube spanned by the frame.
double klain_eval(const FormalValuation& phi, const Mat& frame);

using ValuationFn = std::function<double(const std::optional<Polytope>&)>;

ValuationFn make_chi_functional();
ValuationFn make_volume_functional();
ValuationFn make_formal_functional(const FormalValuation& phi);

// Monte Carlo Alesker product: mu_A . phi (K) = int phi(K cap (x - A)) dx.
// The integrand is supported on x in K + A; x is sampled uniformly there.
Estimate product_mc(const Polytope& a, const ValuationFn& phi, const Polytope& k,
                    long samples, const RngStream& rng, int threads = 0);

}  // namespace valgeo

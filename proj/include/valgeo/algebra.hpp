#pragma once

#include <string>
#include <vector>

#include "valgeo/scaled_rational.hpp"

namespace valgeo {

// Volume of the k-dimensional unit ball, exact.
// omega_0 = 1, omega_1 = 2, omega_2 = pi, omega_3 = 4pi/3, omega_4 = pi^2/2.
ScaledRational omega(int k);

// Flag coefficient [n k] = binom(n,k) * omega_n / (omega_k * omega_{n-k}).
ScaledRational flag_coeff(int n, int k);

// An SO(n)-invariant valuation sum_k coeffs[k] * mu_k over the intrinsic
// volume basis mu_0 .. mu_n.
struct InvariantValuation {
  int dim = 0;
  std::vector<ScaledRational> coeffs;  // size dim+1

  static InvariantValuation zero(int n);
  static InvariantValuation basis(int n, int k);  // mu_k
  static InvariantValuation chi(int n) { return basis(n, 0); }
  static InvariantValuation vol(int n) { return basis(n, n); }

  bool operator==(const InvariantValuation& o) const {
    return dim == o.dim && coeffs == o.coeffs;
  }
};

InvariantValuation operator+(const InvariantValuation& a, const InvariantValuation& b);
InvariantValuation operator*(const ScaledRational& c, const InvariantValuation& a);

// Element of Val^{SO(n)} (x) Val^{SO(n)}: entries[i][j] multiplies mu_i (x) mu_j.
struct KinematicTensor {
  int dim = 0;
  std::vector<std::vector<ScaledRational>> entries;  // (dim+1) x (dim+1)

  static KinematicTensor zero(int n);
  KinematicTensor dxd() const;      // index reversal (i,j) -> (n-i, n-j)
  bool symmetric() const;
  bool operator==(const KinematicTensor& o) const {
    return dim == o.dim && entries == o.entries;
  }
};

// k_{SO(n)}(mu_k): support on i+j = n+k, entry [n+k k][n+k i]^{-1}.
KinematicTensor kinematic_coproduct(int n, int k);

// Hadwiger's additive table: a_{SO(n)}(mu_k), support on i+j = k,
// entry [2n-k n-k][2n-k n-i]^{-1}.
KinematicTensor additive_coproduct(int n, int k);

// Convolution structure constant: mu_i * mu_j = c(n,i,j) mu_{i+j-n}
// (zero when i+j < n). Derived from the mixed-volume convolution formula
// with all reference bodies equal to the unit ball.
ScaledRational convolution_constant(int n, int i, int j);

// Product structure constant: mu_i . mu_j = p(n,i,j) mu_{i+j}, obtained by
// conjugating the convolution with the duality transform.
ScaledRational product_constant(int n, int i, int j);

// Precomputed structure constants; verifiers consume this so that tests can
// perturb individual entries and confirm the suite notices.
struct AlgebraTables {
  int dim = 0;
  std::vector<std::vector<ScaledRational>> conv;       // c(n,i,j)
  std::vector<KinematicTensor> kinematic;              // k_G(mu_k), k = 0..n
  std::vector<KinematicTensor> additive;               // a_G(mu_k), k = 0..n
};

AlgebraTables build_tables(int n);

InvariantValuation dual(const InvariantValuation& phi);
InvariantValuation convolve(const InvariantValuation& a, const InvariantValuation& b,
                            const AlgebraTables& t);
InvariantValuation product(const InvariantValuation& a, const InvariantValuation& b,
                           const AlgebraTables& t);
// Top-degree coefficient of product(a, b).
ScaledRational poincare_pairing(const InvariantValuation& a, const InvariantValuation& b,
                                const AlgebraTables& t);
InvariantValuation lefschetz_lambda(const InvariantValuation& phi, const AlgebraTables& t);
InvariantValuation lefschetz_L(const InvariantValuation& phi, const AlgebraTables& t);

struct IdentityReport {
  std::string identity;
  int dim = 0;
  bool pass = false;
  std::vector<std::string> failures;  // "lhs != rhs" style diagnostics
  std::string to_json() const;
};

// Exact identity verifiers (zero tolerance, ScaledRational arithmetic).
IdentityReport verify_dxd(const AlgebraTables& t);
IdentityReport verify_additive_kf(const AlgebraTables& t);
IdentityReport verify_abstract(const AlgebraTables& t);
IdentityReport verify_lefschetz_duality(const AlgebraTables& t);
IdentityReport verify_product_convolution_duality(const AlgebraTables& t);
IdentityReport verify_steiner_convolution(const AlgebraTables& t);
IdentityReport verify_ring_axioms(const AlgebraTables& t);

std::vector<IdentityReport> verify_all(const AlgebraTables& t);
std::vector<IdentityReport> verify_all(int n);

}  // namespace valgeo

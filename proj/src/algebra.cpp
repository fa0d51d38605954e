#include "valgeo/algebra.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace valgeo {

namespace {

Rational factorial(int m) {
  Rational r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

void check_range(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range("index k=" + std::to_string(k) + " out of range for n=" +
                            std::to_string(n));
}

}  // namespace

ScaledRational omega(int k) {
  if (k < 0) throw std::out_of_range("omega: negative dimension");
  if (k % 2 == 0) {
    int m = k / 2;
    return ScaledRational(Rational(1) / factorial(m), m);
  }
  // omega_{2m+1} = 2^k m! / k! * pi^m  (the sqrt(pi) from Gamma(k/2+1) cancels)
  int m = (k - 1) / 2;
  Rational q = 1;
  for (int i = 0; i < k; ++i) q *= 2;
  q = q * factorial(m) / factorial(k);
  return ScaledRational(q, m);
}

ScaledRational flag_coeff(int n, int k) {
  check_range(n, k);
  return ScaledRational(binomial(n, k)) * omega(n) / (omega(k) * omega(n - k));
}

InvariantValuation InvariantValuation::zero(int n) {
  InvariantValuation v;
  v.dim = n;
  v.coeffs.assign(n + 1, ScaledRational());
  return v;
}

InvariantValuation InvariantValuation::basis(int n, int k) {
  check_range(n, k);
  auto v = zero(n);
  v.coeffs[k] = ScaledRational::integer(1);
  return v;
}

InvariantValuation operator+(const InvariantValuation& a, const InvariantValuation& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  auto r = a;
  for (int k = 0; k <= a.dim; ++k) r.coeffs[k] += b.coeffs[k];
  return r;
}

InvariantValuation operator*(const ScaledRational& c, const InvariantValuation& a) {
  auto r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

KinematicTensor KinematicTensor::zero(int n) {
  KinematicTensor t;
  t.dim = n;
  t.entries.assign(n + 1, std::vector<ScaledRational>(n + 1));
  return t;
}

KinematicTensor KinematicTensor::dxd() const {
  auto r = zero(dim);
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j <= dim; ++j) r.entries[dim - i][dim - j] = entries[i][j];
  return r;
}

bool KinematicTensor::symmetric() const {
  for (int i = 0; i <= dim; ++i)
    for (int j = 0; j < i; ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

KinematicTensor kinematic_coproduct(int n, int k) {
  check_range(n, k);
  auto t = KinematicTensor::zero(n);
  for (int i = 0; i <= n; ++i) {
    int j = n + k - i;
    if (j < 0 || j > n) continue;
    t.entries[i][j] = flag_coeff(n + k, k) / flag_coeff(n + k, i);
  }
  return t;
}

KinematicTensor additive_coproduct(int n, int k) {
  check_range(n, k);
  auto t = KinematicTensor::zero(n);
  for (int i = 0; i <= k; ++i) {
    int j = k - i;
    if (i > n || j > n) continue;
    t.entries[i][j] = flag_coeff(2 * n - k, n - k) / flag_coeff(2 * n - k, n - i);
  }
  return t;
}

ScaledRational convolution_constant(int n, int i, int j) {
  check_range(n, i);
  check_range(n, j);
  int k = i + j - n;
  if (k < 0) return ScaledRational();
  Rational q = binomial(n, i) * binomial(n, j) * binomial(i + j, n) /
               (binomial(i + j, i) * binomial(n, k));
  return ScaledRational(q) * omega(2 * n - i - j) / (omega(n - i) * omega(n - j));
}

ScaledRational product_constant(int n, int i, int j) {
  check_range(n, i);
  check_range(n, j);
  if (i + j > n) return ScaledRational();
  return convolution_constant(n, n - i, n - j);
}

AlgebraTables build_tables(int n) {
  AlgebraTables t;
  t.dim = n;
  t.conv.assign(n + 1, std::vector<ScaledRational>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) t.conv[i][j] = convolution_constant(n, i, j);
  for (int k = 0; k <= n; ++k) {
    t.kinematic.push_back(kinematic_coproduct(n, k));
    t.additive.push_back(additive_coproduct(n, k));
  }
  return t;
}

InvariantValuation dual(const InvariantValuation& phi) {
  auto r = phi;
  for (int k = 0; k <= phi.dim; ++k) r.coeffs[k] = phi.coeffs[phi.dim - k];
  return r;
}

InvariantValuation convolve(const InvariantValuation& a, const InvariantValuation& b,
                            const AlgebraTables& t) {
  if (a.dim != b.dim || a.dim != t.dim) throw std::invalid_argument("dimension mismatch");
  int n = a.dim;
  auto r = InvariantValuation::zero(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i + j < n) continue;
      r.coeffs[i + j - n] += t.conv[i][j] * a.coeffs[i] * b.coeffs[j];
    }
  return r;
}

InvariantValuation product(const InvariantValuation& a, const InvariantValuation& b,
                           const AlgebraTables& t) {
  if (a.dim != b.dim || a.dim != t.dim) throw std::invalid_argument("dimension mismatch");
  int n = a.dim;
  // phi . psi = D(D phi * D psi); everything in Val^{SO(n)} is even.
  return dual(convolve(dual(a), dual(b), t));
}

ScaledRational poincare_pairing(const InvariantValuation& a, const InvariantValuation& b,
                                const AlgebraTables& t) {
  return product(a, b, t).coeffs[t.dim];
}

InvariantValuation lefschetz_lambda(const InvariantValuation& phi, const AlgebraTables& t) {
  auto two_mu = ScaledRational::integer(2) * InvariantValuation::basis(t.dim, t.dim - 1);
  return convolve(two_mu, phi, t);
}

InvariantValuation lefschetz_L(const InvariantValuation& phi, const AlgebraTables& t) {
  return product(InvariantValuation::basis(t.dim, 1), phi, t);
}

std::string IdentityReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["n"] = dim;
  j["status"] = pass ? "pass" : "fail";
  if (!failures.empty()) j["counterexample"] = failures;
  return j.dump();
}

namespace {

struct Checker {
  IdentityReport rep;
  explicit Checker(std::string name, int n) {
    rep.identity = std::move(name);
    rep.dim = n;
    rep.pass = true;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      rep.pass = false;
      rep.failures.push_back(what);
    }
  }
  void expect_eq(const ScaledRational& lhs, const ScaledRational& rhs,
                 const std::string& ctx) {
    expect(lhs == rhs, ctx + ": lhs=" + lhs.str() + " rhs=" + rhs.str());
  }
};

std::string val_str(const InvariantValuation& v) {
  std::string s = "(";
  for (int k = 0; k <= v.dim; ++k) s += (k ? ", " : "") + v.coeffs[k].str();
  return s + ")";
}

}  // namespace

IdentityReport verify_dxd(const AlgebraTables& t) {
  Checker c("(DxD)(k_G(chi)) = k_G(chi)", t.dim);
  c.expect(t.kinematic[0].dxd() == t.kinematic[0], "k_G(chi) not DxD-invariant");
  return c.rep;
}

IdentityReport verify_additive_kf(const AlgebraTables& t) {
  Checker c("a_G = (DxD) o k_G o D", t.dim);
  for (int k = 0; k <= t.dim; ++k) {
    // D(mu_k) = mu_{n-k}, so compare a_G(mu_k) with (DxD) k_G(mu_{n-k}).
    c.expect(t.additive[k] == t.kinematic[t.dim - k].dxd(),
             "mismatch at mu_" + std::to_string(k));
  }
  return c.rep;
}

IdentityReport verify_abstract(const AlgebraTables& t) {
  Checker c("(pxp) o k_G = m_G* o p", t.dim);
  int n = t.dim;
  auto mu = [&](int k) { return InvariantValuation::basis(n, k); };
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int cc = 0; cc <= n; ++cc) {
        // <k_G(mu_a) . (mu_b x mu_c), vol* x vol*> vs <mu_a mu_b mu_c, vol*>
        ScaledRational lhs;
        for (int i = 0; i <= n; ++i)
          for (int j = 0; j <= n; ++j) {
            if (t.kinematic[a].entries[i][j].is_zero()) continue;
            lhs += t.kinematic[a].entries[i][j] * poincare_pairing(mu(i), mu(b), t) *
                   poincare_pairing(mu(j), mu(cc), t);
          }
        ScaledRational rhs = product(product(mu(a), mu(b), t), mu(cc), t).coeffs[n];
        c.expect_eq(lhs, rhs,
                    "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(cc) + ")");
      }
  return c.rep;
}

IdentityReport verify_lefschetz_duality(const AlgebraTables& t) {
  Checker c("Lambda = 2 D o L o D", t.dim);
  for (int k = 0; k <= t.dim; ++k) {
    auto phi = InvariantValuation::basis(t.dim, k);
    auto lhs = lefschetz_lambda(phi, t);
    auto rhs = ScaledRational::integer(2) * dual(lefschetz_L(dual(phi), t));
    c.expect(lhs == rhs, "mu_" + std::to_string(k) + ": lhs=" + val_str(lhs) +
                             " rhs=" + val_str(rhs));
  }
  return c.rep;
}

IdentityReport verify_product_convolution_duality(const AlgebraTables& t) {
  Checker c("phi . psi = D(phi * psi) in complementary degrees", t.dim);
  int n = t.dim;
  for (int k = 0; k <= n; ++k) {
    auto a = InvariantValuation::basis(n, k);
    auto b = InvariantValuation::basis(n, n - k);
    auto lhs = product(a, b, t);
    auto rhs = dual(convolve(a, b, t));
    c.expect(lhs == rhs, "k=" + std::to_string(k) + ": lhs=" + val_str(lhs) +
                             " rhs=" + val_str(rhs));
  }
  return c.rep;
}

IdentityReport verify_steiner_convolution(const AlgebraTables& t) {
  // S(r) = sum_k omega_{n-k} r^{n-k} mu_k is the Steiner vector of mu_{rB}.
  // conv(S(r), S(s)) = S(r+s) as a polynomial identity in (r, s): the
  // coefficient of r^{n-i} s^{n-j} in degree i+j-n must be
  // binom(n-k, n-i) omega_{n-k}.
  Checker c("Steiner oracle conv(S(r),S(s)) = S(r+s)", t.dim);
  int n = t.dim;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i + j < n) continue;
      int k = i + j - n;
      ScaledRational lhs = t.conv[i][j] * omega(n - i) * omega(n - j);
      ScaledRational rhs = ScaledRational(binomial(n - k, n - i)) * omega(n - k);
      c.expect_eq(lhs, rhs, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return c.rep;
}

IdentityReport verify_ring_axioms(const AlgebraTables& t) {
  Checker c("ring axioms + D intertwines product/convolution", t.dim);
  int n = t.dim;
  auto mu = [&](int k) { return InvariantValuation::basis(n, k); };
  for (int i = 0; i <= n; ++i) {
    c.expect(convolve(InvariantValuation::vol(n), mu(i), t) == mu(i),
             "vol * mu_" + std::to_string(i) + " != mu_" + std::to_string(i));
    c.expect(product(InvariantValuation::chi(n), mu(i), t) == mu(i),
             "chi . mu_" + std::to_string(i) + " != mu_" + std::to_string(i));
    for (int j = 0; j <= n; ++j) {
      c.expect(convolve(mu(i), mu(j), t) == convolve(mu(j), mu(i), t),
               "convolution not commutative");
      c.expect(product(mu(i), mu(j), t) == product(mu(j), mu(i), t),
               "product not commutative");
      c.expect(dual(product(mu(i), mu(j), t)) == convolve(dual(mu(i)), dual(mu(j)), t),
               "D(phi.psi) != Dphi * Dpsi at (" + std::to_string(i) + "," +
                   std::to_string(j) + ")");
      for (int k = 0; k <= n; ++k) {
        c.expect(convolve(convolve(mu(i), mu(j), t), mu(k), t) ==
                     convolve(mu(i), convolve(mu(j), mu(k), t), t),
                 "convolution not associative");
        c.expect(product(product(mu(i), mu(j), t), mu(k), t) ==
                     product(mu(i), product(mu(j), mu(k), t), t),
                 "product not associative");
      }
    }
  }
  // Coproduct grading and cocommutativity.
  for (int k = 0; k <= n; ++k) {
    c.expect(t.kinematic[k].symmetric(), "k_G(mu_k) not symmetric");
    c.expect(t.additive[k].symmetric(), "a_G(mu_k) not symmetric");
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i + j != n + k)
          c.expect(t.kinematic[k].entries[i][j].is_zero(), "k_G grading violated");
        if (i + j != k)
          c.expect(t.additive[k].entries[i][j].is_zero(), "a_G grading violated");
      }
  }
  return c.rep;
}

std::vector<IdentityReport> verify_all(const AlgebraTables& t) {
  return {verify_dxd(t),
          verify_additive_kf(t),
          verify_abstract(t),
          verify_lefschetz_duality(t),
          verify_product_convolution_duality(t),
          verify_steiner_convolution(t),
          verify_ring_axioms(t)};
}

std::vector<IdentityReport> verify_all(int n) { return verify_all(build_tables(n)); }

}  // namespace valgeo

#include "valgeo/valuations.hpp"

#include <cmath>
#include <stdexcept>

#include "valgeo/algebra.hpp"
#include "valgeo/sampling.hpp"

namespace valgeo {

namespace {

double binom_d(int n, int k) { return static_cast<double>(binomial(n, k)); }

bool same_vertices(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.vertices()[i] != b.vertices()[i]) return false;
  return true;
}

// Candidate points of the Minkowski sum of the given bodies, with repeated
// bodies collapsed to a single scaled copy (K + K = 2K for convex K).
std::vector<Vec> sum_candidates(int dim, const std::vector<const Polytope*>& bodies) {
  std::vector<std::pair<const Polytope*, int>> groups;
  for (const auto* b : bodies) {
    bool found = false;
    for (auto& g : groups)
      if (same_vertices(*g.first, *b)) {
        ++g.second;
        found = true;
        break;
      }
    if (!found) groups.push_back({b, 1});
  }
  std::vector<Vec> pts = {Vec(Vec::Zero(dim))};
  for (const auto& [body, mult] : groups) {
    std::vector<Vec> next;
    next.reserve(pts.size() * body->size());
    for (const auto& s : pts)
      for (const auto& v : body->vertices()) next.push_back(s + mult * v);
    // Prune to hull vertices between stages to keep the product small.
    pts = (next.size() > 64) ? hull_vertices(dim, next) : std::move(next);
  }
  return pts;
}

}  // namespace

int FormalValuation::homogeneous_degree() const {
  if (terms.empty()) throw std::invalid_argument("empty valuation has no degree");
  int deg = term_degree(terms[0]);
  for (const auto& t : terms)
    if (term_degree(t) != deg)
      throw std::invalid_argument("valuation is not homogeneous");
  return deg;
}

FormalValuation FormalValuation::graded_part(int k) const {
  FormalValuation out;
  out.dim = dim;
  for (const auto& t : terms)
    if (term_degree(t) == k) out.terms.push_back(t);
  return out;
}

double mixed_volume(const std::vector<Polytope>& bodies) {
  if (bodies.empty()) throw std::invalid_argument("mixed_volume: no bodies");
  int n = bodies[0].dim();
  if (static_cast<int>(bodies.size()) != n)
    throw std::invalid_argument("mixed_volume: need exactly n bodies in dimension n");
  for (const auto& b : bodies)
    if (b.dim() != n) throw std::invalid_argument("mixed_volume: mixed dimensions");

  // V = (1/n!) sum_{S nonempty} (-1)^{n-|S|} vol(sum_{i in S} A_i).
  double acc = 0.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<const Polytope*> sel;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sel.push_back(&bodies[i]);
    double v = volume_of_points(n, sum_candidates(n, sel));
    int sign = ((n - static_cast<int>(sel.size())) % 2 == 0) ? 1 : -1;
    acc += sign * v;
  }
  double fact = 1.0;
  for (int i = 2; i <= n; ++i) fact *= i;
  return acc / fact;
}

IntrinsicVector intrinsic_volumes_mc(const Polytope& p, long samples, const RngStream& rng,
                                     int threads) {
  if (samples <= 0) throw std::invalid_argument("samples must be positive");
  int n = p.dim();
  IntrinsicVector out;
  out.dim = n;
  out.values.assign(n + 1, 0.0);
  out.stderrs.assign(n + 1, 0.0);
  out.values[0] = 1.0;
  out.values[n] = volume(p);
  for (int k = 1; k <= n - 1; ++k) {
    double fl = flag_coeff(n, k).to_double();
    auto est = mc_estimate(
        samples, rng.substream(1000 + k),
        [&](RngStream& r) {
          Mat frame = uniform_grassmannian(r, k, n);
          std::vector<Vec> coords;
          coords.reserve(p.size());
          for (const auto& v : p.vertices()) coords.push_back(frame.transpose() * v);
          return fl * volume_of_points(k, coords);
        },
        threads);
    out.values[k] = est.value;
    out.stderrs[k] = est.stderr_;
  }
  return out;
}

IntrinsicVector intrinsic_volumes_box(const std::vector<double>& sides) {
  int n = static_cast<int>(sides.size());
  for (double s : sides)
    if (s <= 0) throw std::invalid_argument("box sides must be positive");
  IntrinsicVector out;
  out.dim = n;
  out.stderrs.assign(n + 1, 0.0);
  // Elementary symmetric polynomials e_0..e_n of the side lengths.
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (double s : sides)
    for (int k = n; k >= 1; --k) e[k] += s * e[k - 1];
  out.values = e;
  return out;
}

double mu_A_eval(const Polytope& a, const Polytope& k) {
  if (a.dim() != k.dim()) throw std::invalid_argument("dimension mismatch");
  return volume_of_points(a.dim(), sum_candidates(a.dim(), {&a, &k}));
}

FormalValuation mu_A_expand(const Polytope& a) {
  int n = a.dim();
  FormalValuation phi;
  phi.dim = n;
  for (int k = 0; k <= n; ++k) {
    FormalValuation::Term t;
    t.coeff = binom_d(n, k);
    t.bodies.assign(n - k, a);
    phi.terms.push_back(std::move(t));
  }
  return phi;
}

double formal_evaluate(const FormalValuation& phi, const Polytope& k) {
  if (phi.dim != k.dim()) throw std::invalid_argument("dimension mismatch");
  double acc = 0.0;
  for (const auto& t : phi.terms) {
    int deg = phi.term_degree(t);
    if (deg < 0) throw std::invalid_argument("term has more than n bodies");
    std::vector<Polytope> args(t.bodies);
    args.insert(args.end(), deg, k);
    acc += t.coeff * mixed_volume(args);
  }
  return acc;
}

FormalValuation formal_convolve(const FormalValuation& phi, const FormalValuation& psi,
                                ConvolveStats* stats) {
  if (phi.dim != psi.dim) throw std::invalid_argument("dimension mismatch");
  int n = phi.dim;
  FormalValuation out;
  out.dim = n;
  for (const auto& a : phi.terms)
    for (const auto& b : psi.terms) {
      int k = phi.term_degree(a);
      int l = psi.term_degree(b);
      if (k + l < n) {
        if (stats) ++stats->dropped_pairs;
        continue;
      }
      FormalValuation::Term t;
      t.coeff = a.coeff * b.coeff * binom_d(k + l, n) / binom_d(k + l, k);
      t.bodies = a.bodies;
      t.bodies.insert(t.bodies.end(), b.bodies.begin(), b.bodies.end());
      out.terms.push_back(std::move(t));
    }
  return out;
}

double klain_eval(const FormalValuation& phi, const Mat& frame) {
  int k = phi.homogeneous_degree();
  if (frame.cols() != k)
    throw std::invalid_argument("frame dimension does not match valuation degree");
  Mat g = frame.transpose() * frame - Mat::Identity(k, k);
  if (g.cwiseAbs().maxCoeff() >= 1e-10)
    throw std::invalid_argument("frame columns not orthonormal");
  // Unit k-cube spanned by the frame: a body of unit k-volume inside L, so
  // phi(cube) is exactly the Klain density at L.
  std::vector<Vec> verts;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Vec v = Vec::Zero(phi.dim);
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) v += frame.col(i);
    verts.push_back(v);
  }
  return formal_evaluate(phi, Polytope::hull(verts, phi.dim));
}

ValuationFn make_chi_functional() {
  return [](const std::optional<Polytope>& p) { return p ? 1.0 : 0.0; };
}

ValuationFn make_volume_functional() {
  return [](const std::optional<Polytope>& p) { return p ? volume(*p) : 0.0; };
}

ValuationFn make_formal_functional(const FormalValuation& phi) {
  return [phi](const std::optional<Polytope>& p) {
    return p ? formal_evaluate(phi, *p) : 0.0;
  };
}

Estimate product_mc(const Polytope& a, const ValuationFn& phi, const Polytope& k,
                    long samples, const RngStream& rng, int threads) {
  if (a.dim() != k.dim()) throw std::invalid_argument("dimension mismatch");
  // K cap (x - A) is nonempty exactly when x lies in K + A.
  Polytope sup = minkowski_sum(k, a);
  double sup_vol = volume(sup);
  if (sup_vol <= 0) throw std::invalid_argument("degenerate support body");
  PolytopeSampler sampler(sup);
  Polytope neg_a = reflect(a);
  auto est = mc_estimate(
      samples, rng,
      [&](RngStream& r) {
        Vec x = sampler.sample(r);
        Polytope shifted = translate(neg_a, x);  // x - A
        auto inter = intersect(k, shifted);
        return phi(inter);
      },
      threads);
  est.value *= sup_vol;
  est.stderr_ *= sup_vol;
  return est;
}

}  // namespace valgeo

#include "valgeo/sampling.hpp"

#include <Eigen/QR>
#include <stdexcept>

namespace valgeo {

Rotation haar_rotation(RngStream& rng, int n) {
  if (n < 2) throw std::invalid_argument("haar_rotation: n must be >= 2");
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  // Haar on O(n); fold the det = -1 coset onto SO(n).
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return Rotation(q);
}

Mat uniform_grassmannian(RngStream& rng, int k, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("grassmannian: k out of range");
  return haar_rotation(rng, n).matrix.leftCols(k);
}

PolytopeSampler::PolytopeSampler(const Polytope& p) : dim_(p.dim()) {
  lo_ = p.vertices()[0];
  hi_ = p.vertices()[0];
  for (const auto& v : p.vertices()) {
    lo_ = lo_.cwiseMin(v);
    hi_ = hi_.cwiseMax(v);
  }
  box_volume_ = (hi_ - lo_).prod();
  if (box_volume_ <= 0) throw std::invalid_argument("degenerate body");
  halfspaces_ = to_halfspaces(p);
}

Vec PolytopeSampler::sample(RngStream& rng) const {
  Vec x(dim_);
  for (;;) {
    for (int d = 0; d < dim_; ++d) x(d) = rng.uniform(lo_(d), hi_(d));
    if (contains(halfspaces_, x)) return x;
  }
}

Vec uniform_in_polytope(RngStream& rng, const Polytope& p) {
  return PolytopeSampler(p).sample(rng);
}

}  // namespace valgeo

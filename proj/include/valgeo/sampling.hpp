#pragma once

#include "valgeo/polytope.hpp"
#include "valgeo/rng.hpp"

namespace valgeo {

// Haar-distributed element of SO(n): QR of a Gaussian matrix with the sign
// convention that makes the factorization unique, then a determinant fix.
Rotation haar_rotation(RngStream& rng, int n);

// Orthonormal k-frame whose span is invariant-measure distributed on Gr_k(R^n).
Mat uniform_grassmannian(RngStream& rng, int k, int n);

// Rejection sampler for uniform points in a full-dimensional polytope.
// Precomputes the bounding box and halfspace form once.
class PolytopeSampler {
 public:
  explicit PolytopeSampler(const Polytope& p);
  Vec sample(RngStream& rng) const;
  double box_volume() const { return box_volume_; }

 private:
  int dim_;
  Vec lo_, hi_;
  double box_volume_;
  HalfspaceRep halfspaces_;
};

Vec uniform_in_polytope(RngStream& rng, const Polytope& p);

}  // namespace valgeo

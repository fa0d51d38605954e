#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace valgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Vertex dedup tolerance (absolute) and feasibility/round-trip tolerance.
constexpr double kVertexTol = 1e-9;
constexpr double kGeomTol = 1e-7;

struct Halfspace {
  Vec normal;     // unit length
  double offset;  // normal . x <= offset
};

struct HalfspaceRep {
  int dim = 0;
  std::vector<Halfspace> rows;
};

bool contains(const HalfspaceRep& h, const Vec& x, double tol = kGeomTol);

struct Rotation {
  int dim = 0;
  Mat matrix;
  explicit Rotation(Mat m);  // checks orthogonality and det +1 (1e-10)
  Vec apply(const Vec& v) const { return matrix * v; }
};

// Compact convex polytope in R^n (2 <= n <= 4), canonical vertex
// representation: the stored vertices are exactly the extreme points,
// deduplicated and sorted lexicographically. The empty set is never a
// Polytope; operations that can produce it return std::optional.
class Polytope {
 public:
  static Polytope hull(const std::vector<Vec>& points, int dim);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

 private:
  Polytope(int dim, std::vector<Vec> verts)
      : dim_(dim), vertices_(std::move(verts)) {}
  int dim_;
  std::vector<Vec> vertices_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
double volume(const Polytope& p);
std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);
// frame: n x k matrix with orthonormal columns; result lives in the frame's
// coordinates (dimension k).
Polytope project(const Polytope& p, const Mat& frame);
Polytope reflect(const Polytope& p);
Polytope scale(const Polytope& p, double t);
Polytope translate(const Polytope& p, const Vec& x);
Polytope rotate(const Polytope& p, const Rotation& r);
double support(const Polytope& p, const Vec& u);
HalfspaceRep to_halfspaces(const Polytope& p);
Polytope from_halfspaces(const HalfspaceRep& h);

// --- point-set fast paths (no Polytope canonicalization) -------------------
//
// These operate directly on candidate point sets; the Monte Carlo harness
// calls them in its inner loops.

// Extreme points of the set, deduplicated and lexicographically sorted.
std::vector<Vec> hull_vertices(int dim, const std::vector<Vec>& pts);

// dim-volume of the hull of the points (0 for lower-dimensional sets).
double volume_of_points(int dim, const std::vector<Vec>& pts);

// Outward facet halfspaces of a full-dimensional hull.
std::vector<Halfspace> facets_of_points(int dim, const std::vector<Vec>& pts);

// Vertices of { x : rows hold } found by brute-force enumeration of all
// dim-subsets of rows. Empty result means empty (or degenerate) region.
std::vector<Vec> enumerate_vertices(int dim, const std::vector<Halfspace>& rows,
                                    double tol = kGeomTol);

// Exact intrinsic volumes (mu_0..mu_n) of the hull of a point set, n = 2 or 3.
// n=2: (chi, perimeter/2, area). n=3: (chi, sum_e len*angle / 2pi, area/2, vol).
// Empty input gives the zero vector (chi of the empty set is 0).
std::vector<double> intrinsic_exact_points(int dim, const std::vector<Vec>& pts);

}  // namespace valgeo

#include "valgeo/polytope.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "valgeo/linprog.hpp"

namespace valgeo {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

double scale_of(const std::vector<Vec>& pts) {
  double s = 1.0;
  for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return s;
}

std::vector<Vec> dedupe(const std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out)
      if ((p - q).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

int affine_rank(const std::vector<Vec>& pts, int dim, double tol) {
  if (pts.size() <= 1) return 0;
  Mat d(static_cast<int>(pts.size()) - 1, dim);
  for (std::size_t i = 1; i < pts.size(); ++i) d.row(i - 1) = (pts[i] - pts[0]).transpose();
  Eigen::JacobiSVD<Mat> svd(d);
  int r = 0;
  double top = svd.singularValues()(0);
  if (top <= tol) return 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * std::max(1.0, top)) ++r;
  return r;
}

// ----- 2D: monotone chain --------------------------------------------------

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

// Counterclockwise ring of hull vertices (collinear points dropped).
std::vector<Vec> chain_hull2d(std::vector<Vec> pts) {
  pts = dedupe(pts, kVertexTol);
  if (pts.size() <= 2) {
    std::sort(pts.begin(), pts.end(), lex_less);
    return pts;
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  double s = scale_of(pts);
  double eps = 1e-12 * s * s;
  std::vector<Vec> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= eps) --k;
    h[k++] = p;
  }
  std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper
    while (k >= lower && cross2(h[k - 2], h[k - 1], *it) <= eps) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  return h;
}

double ring_area(const std::vector<Vec>& ring) {
  double a = 0.0;
  int m = static_cast<int>(ring.size());
  for (int i = 0; i < m; ++i) {
    const Vec& p = ring[i];
    const Vec& q = ring[(i + 1) % m];
    a += p(0) * q(1) - q(0) * p(1);
  }
  return 0.5 * std::abs(a);
}

double ring_perimeter(const std::vector<Vec>& ring) {
  double l = 0.0;
  int m = static_cast<int>(ring.size());
  if (m < 2) return 0.0;
  for (int i = 0; i < m; ++i) l += (ring[(i + 1) % m] - ring[i]).norm();
  return l;
}

// ----- 3D: incremental hull ------------------------------------------------

struct Tri {
  int v[3];
  Eigen::Vector3d n;  // outward unit normal
  double off;
  bool alive = true;
};

bool make_tri(const std::vector<Eigen::Vector3d>& p, int a, int b, int c,
              const Eigen::Vector3d& inside, Tri& out, double degenerate_tol) {
  Eigen::Vector3d n = (p[b] - p[a]).cross(p[c] - p[a]);
  double nn = n.norm();
  if (nn < degenerate_tol) return false;
  n /= nn;
  if (n.dot(inside - p[a]) > 0) {
    n = -n;
    std::swap(b, c);
  }
  out.v[0] = a;
  out.v[1] = b;
  out.v[2] = c;
  out.n = n;
  out.off = n.dot(p[a]);
  out.alive = true;
  return true;
}

// Returns false when the input is degenerate or the build hits a degenerate
// face; caller falls back to the brute-force facet path.
bool hull3d(const std::vector<Vec>& pts_in, std::vector<Eigen::Vector3d>& p,
            std::vector<Tri>& faces) {
  p.clear();
  faces.clear();
  for (const auto& v : pts_in) p.push_back(Eigen::Vector3d(v(0), v(1), v(2)));
  int m = static_cast<int>(p.size());
  if (m < 4) return false;
  double s = 1.0;
  for (const auto& q : p) s = std::max(s, q.cwiseAbs().maxCoeff());
  double eps = 1e-9 * s;
  double deg_tol = 1e-12 * s * s;

  // Initial tetrahedron of well-separated points.
  int i0 = 0;
  for (int i = 1; i < m; ++i)
    if (p[i].x() < p[i0].x() || (p[i].x() == p[i0].x() && i < i0)) i0 = i;
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < m; ++i) {
    double d = (p[i] - p[i0]).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) return false;
  int i2 = -1;
  best = deg_tol;
  for (int i = 0; i < m; ++i) {
    double d = (p[i] - p[i0]).cross(p[i1] - p[i0]).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) return false;
  Eigen::Vector3d n0 = (p[i1] - p[i0]).cross(p[i2] - p[i0]).normalized();
  int i3 = -1;
  best = eps;
  for (int i = 0; i < m; ++i) {
    double d = std::abs(n0.dot(p[i] - p[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) return false;

  Eigen::Vector3d inside = (p[i0] + p[i1] + p[i2] + p[i3]) / 4.0;
  int init[4][3] = {{i0, i1, i2}, {i0, i1, i3}, {i0, i2, i3}, {i1, i2, i3}};
  for (auto& f : init) {
    Tri t;
    if (!make_tri(p, f[0], f[1], f[2], inside, t, deg_tol)) return false;
    faces.push_back(t);
  }

  // Far points first; keeps structured (grid-like) inputs from creating
  // degenerate intermediate faces.
  std::vector<int> order;
  for (int i = 0; i < m; ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return (p[a] - inside).squaredNorm() > (p[b] - inside).squaredNorm();
  });

  for (int idx : order) {
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      if (faces[f].alive && faces[f].n.dot(p[idx]) - faces[f].off > eps)
        visible.push_back(f);
    if (visible.empty()) continue;

    std::map<std::pair<int, int>, int> edge_owner;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!faces[f].alive) continue;
      for (int e = 0; e < 3; ++e)
        edge_owner[{faces[f].v[e], faces[f].v[(e + 1) % 3]}] = f;
    }
    std::vector<std::pair<int, int>> horizon;
    std::vector<bool> is_visible(faces.size(), false);
    for (int f : visible) is_visible[f] = true;
    for (int f : visible)
      for (int e = 0; e < 3; ++e) {
        int a = faces[f].v[e];
        int b = faces[f].v[(e + 1) % 3];
        auto it = edge_owner.find({b, a});
        if (it == edge_owner.end() || !is_visible[it->second]) horizon.push_back({a, b});
      }
    for (int f : visible) faces[f].alive = false;
    for (auto [a, b] : horizon) {
      Tri t;
      if (!make_tri(p, a, b, idx, inside, t, deg_tol)) return false;
      faces.push_back(t);
    }
  }
  faces.erase(std::remove_if(faces.begin(), faces.end(),
                             [](const Tri& t) { return !t.alive; }),
              faces.end());
  return !faces.empty();
}

double tri_area(const std::vector<Eigen::Vector3d>& p, const Tri& t) {
  return 0.5 * (p[t.v[1]] - p[t.v[0]]).cross(p[t.v[2]] - p[t.v[0]]).norm();
}

// ----- generic brute-force facets (any dim, small inputs) -------------------

void combinations(int m, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Halfspace> brute_facets(int dim, const std::vector<Vec>& pts) {
  std::vector<Halfspace> out;
  int m = static_cast<int>(pts.size());
  if (m < dim) return out;
  double s = scale_of(pts);
  double side_tol = 1e-9 * s;
  combinations(m, dim, [&](const std::vector<int>& idx) {
    Mat d(dim - 1, dim);
    for (int i = 1; i < dim; ++i) d.row(i - 1) = (pts[idx[i]] - pts[idx[0]]).transpose();
    Eigen::JacobiSVD<Mat> svd(d, Eigen::ComputeFullV);
    if (dim > 1) {
      double top = svd.singularValues()(0);
      if (svd.singularValues()(dim - 2) < 1e-9 * std::max(1.0, top)) return;
    }
    Vec n = svd.matrixV().col(dim - 1);
    double off = n.dot(pts[idx[0]]);
    int above = 0, below = 0;
    for (const auto& q : pts) {
      double v = n.dot(q) - off;
      if (v > side_tol) ++above;
      if (v < -side_tol) ++below;
    }
    if (above > 0 && below > 0) return;
    if (above > 0) {
      n = -n;
      off = -off;
    }
    for (const auto& h : out)
      if ((h.normal - n).cwiseAbs().maxCoeff() < 1e-7 && std::abs(h.offset - off) < 1e-7 * s)
        return;
    out.push_back({n, off});
  });
  return out;
}

std::vector<Vec> facet_points(const std::vector<Vec>& pts, const Halfspace& h, double tol) {
  std::vector<Vec> out;
  for (const auto& q : pts)
    if (std::abs(h.normal.dot(q) - h.offset) <= tol) out.push_back(q);
  return out;
}

// Orthonormal basis of the hyperplane orthogonal to n.
Mat plane_basis(const Vec& n) {
  int dim = static_cast<int>(n.size());
  Eigen::JacobiSVD<Mat> svd(n.transpose(), Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim - 1);
}

double volume_by_facets(int dim, const std::vector<Vec>& pts,
                        const std::vector<Halfspace>& facets) {
  Vec c = Vec::Zero(dim);
  for (const auto& q : pts) c += q;
  c /= static_cast<double>(pts.size());
  double s = scale_of(pts);
  double vol = 0.0;
  for (const auto& f : facets) {
    auto fp = facet_points(pts, f, 1e-7 * s);
    if (fp.size() < static_cast<std::size_t>(dim)) continue;
    Mat basis = plane_basis(f.normal);
    std::vector<Vec> coords;
    for (const auto& q : fp) coords.push_back(basis.transpose() * q);
    double fvol = volume_of_points(dim - 1, coords);
    vol += (f.offset - f.normal.dot(c)) * fvol;
  }
  return vol / dim;
}

// Group 3D hull triangles by supporting plane; returns (halfspace, area,
// in-plane hull of facet points) per facet.
struct Facet3 {
  Halfspace h;
  double area = 0.0;
  std::vector<Eigen::Vector3d> points;  // hull points on the plane
};

std::vector<Facet3> group_facets3(const std::vector<Eigen::Vector3d>& p,
                                  const std::vector<Tri>& tris) {
  double s = 1.0;
  for (const auto& q : p) s = std::max(s, q.cwiseAbs().maxCoeff());
  std::vector<Facet3> out;
  for (const auto& t : tris) {
    Facet3* grp = nullptr;
    for (auto& g : out)
      if ((g.h.normal - Vec(t.n)).cwiseAbs().maxCoeff() < 1e-7 &&
          std::abs(g.h.offset - t.off) < 1e-7 * s) {
        grp = &g;
        break;
      }
    if (!grp) {
      out.push_back(Facet3{{Vec(t.n), t.off}, 0.0, {}});
      grp = &out.back();
    }
  }
  // Collect hull points per plane, then measure each facet as a 2D hull so
  // that overlapping coplanar triangles cannot double-count.
  std::vector<bool> used(p.size(), false);
  for (const auto& t : tris)
    for (int i = 0; i < 3; ++i) used[t.v[i]] = true;
  for (auto& g : out) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (used[i] && std::abs(g.h.normal.dot(p[i]) - g.h.offset) < 1e-7 * s)
        g.points.push_back(p[i]);
    Mat basis = plane_basis(g.h.normal);
    std::vector<Vec> coords;
    for (const auto& q : g.points) coords.push_back(basis.transpose() * Vec(q));
    g.area = volume_of_points(2, coords);
  }
  return out;
}

std::vector<Facet3> facets3_of_points(const std::vector<Vec>& pts) {
  std::vector<Eigen::Vector3d> p;
  std::vector<Tri> tris;
  if (hull3d(pts, p, tris)) return group_facets3(p, tris);
  // Brute-force fallback for degenerate builds.
  auto hs = brute_facets(3, pts);
  std::vector<Facet3> out;
  double s = scale_of(pts);
  for (const auto& h : hs) {
    Facet3 g{h, 0.0, {}};
    for (const auto& q : pts)
      if (std::abs(h.normal.dot(q) - h.offset) < 1e-7 * s)
        g.points.push_back(Eigen::Vector3d(q(0), q(1), q(2)));
    Mat basis = plane_basis(h.normal);
    std::vector<Vec> coords;
    for (const auto& q : g.points) coords.push_back(basis.transpose() * Vec(q));
    g.area = volume_of_points(2, coords);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

// ----- point-set API --------------------------------------------------------

double volume_of_points(int dim, const std::vector<Vec>& pts) {
  if (pts.empty()) return 0.0;
  if (dim == 0) return 1.0;
  if (dim == 1) {
    double lo = pts[0](0), hi = pts[0](0);
    for (const auto& q : pts) {
      lo = std::min(lo, q(0));
      hi = std::max(hi, q(0));
    }
    return hi - lo;
  }
  double s = scale_of(pts);
  if (affine_rank(pts, dim, 1e-9 * s) < dim) return 0.0;
  if (dim == 2) return ring_area(chain_hull2d(pts));
  if (dim == 3) {
    std::vector<Eigen::Vector3d> p;
    std::vector<Tri> tris;
    if (hull3d(pts, p, tris)) {
      Eigen::Vector3d c = Eigen::Vector3d::Zero();
      for (const auto& q : p) c += q;
      c /= static_cast<double>(p.size());
      double vol = 0.0;
      for (const auto& t : tris) vol += (t.off - t.n.dot(c)) * tri_area(p, t);
      return vol / 3.0;
    }
    return volume_by_facets(3, pts, brute_facets(3, pts));
  }
  return volume_by_facets(dim, pts, brute_facets(dim, pts));
}

std::vector<Vec> hull_vertices(int dim, const std::vector<Vec>& pts) {
  auto pd = dedupe(pts, kVertexTol);
  if (pd.empty()) throw std::invalid_argument("empty point set");
  std::vector<Vec> out;
  if (dim == 1) {
    Vec lo = pd[0], hi = pd[0];
    for (const auto& q : pd) {
      if (q(0) < lo(0)) lo = q;
      if (q(0) > hi(0)) hi = q;
    }
    out = {lo, hi};
    out = dedupe(out, kVertexTol);
  } else if (dim == 2) {
    out = chain_hull2d(pd);
  } else {
    // Prefilter with the incremental hull when it applies, then keep the
    // points that are genuinely extreme.
    std::vector<Vec> candidates = pd;
    if (dim == 3) {
      std::vector<Eigen::Vector3d> p;
      std::vector<Tri> tris;
      if (hull3d(pd, p, tris)) {
        std::vector<bool> used(p.size(), false);
        for (const auto& t : tris)
          for (int i = 0; i < 3; ++i) used[t.v[i]] = true;
        candidates.clear();
        for (std::size_t i = 0; i < p.size(); ++i)
          if (used[i]) candidates.push_back(pd[i]);
      }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < candidates.size(); ++j)
        if (j != i) others.push_back(candidates[j]);
      if (!in_convex_hull(candidates[i], others, kVertexTol)) out.push_back(candidates[i]);
    }
    if (out.empty()) out.push_back(pd[0]);  // all coincident within tolerance
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Halfspace> facets_of_points(int dim, const std::vector<Vec>& pts) {
  if (dim == 2) {
    auto ring = chain_hull2d(pts);
    std::vector<Halfspace> out;
    int m = static_cast<int>(ring.size());
    if (m < 3) return brute_facets(2, pts);
    for (int i = 0; i < m; ++i) {
      Vec e = ring[(i + 1) % m] - ring[i];
      Vec n(2);
      n << e(1), -e(0);  // outward for a ccw ring
      n.normalize();
      out.push_back({n, n.dot(ring[i])});
    }
    return out;
  }
  if (dim == 3) {
    auto groups = facets3_of_points(pts);
    std::vector<Halfspace> out;
    for (auto& g : groups) out.push_back(g.h);
    return out;
  }
  return brute_facets(dim, pts);
}

std::vector<Vec> enumerate_vertices(int dim, const std::vector<Halfspace>& rows,
                                    double tol) {
  std::vector<Vec> out;
  int m = static_cast<int>(rows.size());
  if (m < dim) return out;
  auto feasible = [&](const Vec& x) {
    for (const auto& r : rows)
      if (r.normal.dot(x) > r.offset + tol) return false;
    return true;
  };
  combinations(m, dim, [&](const std::vector<int>& idx) {
    Mat A(dim, dim);
    Vec b(dim);
    for (int i = 0; i < dim; ++i) {
      A.row(i) = rows[idx[i]].normal.transpose();
      b(i) = rows[idx[i]].offset;
    }
    Eigen::FullPivLU<Mat> lu(A);
    lu.setThreshold(1e-9);
    if (!lu.isInvertible()) return;
    Vec x = lu.solve(b);
    if (feasible(x)) out.push_back(x);
  });
  return dedupe(out, kVertexTol);
}

std::vector<double> intrinsic_exact_points(int dim, const std::vector<Vec>& pts) {
  std::vector<double> mu(dim + 1, 0.0);
  if (pts.empty()) return mu;  // chi(empty) = 0
  mu[0] = 1.0;
  double s = scale_of(pts);
  int rank = affine_rank(pts, dim, 1e-9 * s);
  if (dim == 2) {
    auto ring = chain_hull2d(pts);
    mu[1] = ring_perimeter(ring) / 2.0;
    mu[2] = ring_area(ring);
    return mu;
  }
  if (dim != 3) throw std::invalid_argument("intrinsic_exact_points: dim must be 2 or 3");
  if (rank == 0) return mu;
  if (rank == 1) {
    double lo = 0, hi = 0;
    Vec d = Vec::Zero(dim);
    for (const auto& q : pts)
      if ((q - pts[0]).norm() > (d).norm()) d = q - pts[0];
    d.normalize();
    for (const auto& q : pts) {
      double v = d.dot(q - pts[0]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    mu[1] = hi - lo;
    return mu;
  }
  if (rank == 2) {
    // Flat body: intrinsic volumes of the 2D shadow, embedded.
    std::vector<Vec> diffs;
    for (const auto& q : pts) diffs.push_back(q - pts[0]);
    Mat d(static_cast<int>(diffs.size()), dim);
    for (std::size_t i = 0; i < diffs.size(); ++i) d.row(i) = diffs[i].transpose();
    Eigen::JacobiSVD<Mat> svd(d, Eigen::ComputeFullV);
    Mat basis = svd.matrixV().leftCols(2);
    std::vector<Vec> coords;
    for (const auto& q : pts) coords.push_back(basis.transpose() * q);
    auto ring = chain_hull2d(coords);
    mu[1] = ring_perimeter(ring) / 2.0;
    mu[2] = ring_area(ring);
    return mu;
  }
  auto groups = facets3_of_points(pts);
  Vec c = Vec::Zero(3);
  for (const auto& q : pts) c += q;
  c /= static_cast<double>(pts.size());
  double area = 0.0, vol = 0.0, edge_sum = 0.0;
  for (const auto& g : groups) {
    area += g.area;
    vol += (g.h.offset - g.h.normal.dot(c)) * g.area / 3.0;
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto& gi = groups[i];
      const auto& gj = groups[j];
      Eigen::Vector3d ni(gi.h.normal), nj(gj.h.normal);
      Eigen::Vector3d dir = ni.cross(nj);
      double sn = dir.norm();
      if (sn < 1e-9) continue;  // parallel planes share no edge
      dir /= sn;
      double lo = 0, hi = 0;
      bool first = true;
      int count = 0;
      for (const auto& q : gi.points)
        if (std::abs(gj.h.normal.dot(Vec(q)) - gj.h.offset) < 1e-7 * s) {
          double v = dir.dot(q);
          if (first) {
            lo = hi = v;
            first = false;
          } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
          }
          ++count;
        }
      if (count < 2) continue;
      double theta = std::atan2(sn, ni.dot(nj));  // exterior dihedral angle
      edge_sum += (hi - lo) * theta;
    }
  mu[1] = edge_sum / (2.0 * M_PI);
  mu[2] = area / 2.0;
  mu[3] = vol;
  return mu;
}

// ----- Polytope API ----------------------------------------------------------

bool contains(const HalfspaceRep& h, const Vec& x, double tol) {
  for (const auto& r : h.rows)
    if (r.normal.dot(x) > r.offset + tol) return false;
  return true;
}

Rotation::Rotation(Mat m) : dim(static_cast<int>(m.rows())), matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("rotation not square");
  Mat g = matrix.transpose() * matrix - Mat::Identity(dim, dim);
  if (g.cwiseAbs().maxCoeff() >= 1e-10)
    throw std::invalid_argument("rotation matrix not orthogonal");
  if (std::abs(matrix.determinant() - 1.0) >= 1e-10)
    throw std::invalid_argument("rotation matrix has determinant != +1");
}

Polytope Polytope::hull(const std::vector<Vec>& points, int dim) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  if (dim < 1 || dim > 4) throw std::invalid_argument("dimension must be in 1..4");
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("point dimension mismatch");
  return Polytope(dim, hull_vertices(dim, points));
}

namespace {
Polytope remap(const Polytope& p, const std::function<Vec(const Vec&)>& f) {
  // Affine maps preserve extremality, so only re-sorting is needed.
  std::vector<Vec> v;
  for (const auto& q : p.vertices()) v.push_back(f(q));
  std::sort(v.begin(), v.end(), lex_less);
  return Polytope::hull(v, p.dim());
}
}  // namespace

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<Vec> sums;
  sums.reserve(p.size() * q.size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return Polytope::hull(sums, p.dim());
}

double volume(const Polytope& p) { return volume_of_points(p.dim(), p.vertices()); }

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  // A single point intersects iff it lies in the other body.
  if (q.size() == 1) {
    if (contains(to_halfspaces(p), q.vertices()[0])) return q;
    return std::nullopt;
  }
  if (p.size() == 1) return intersect(q, p);
  auto hp = to_halfspaces(p);
  auto hq = to_halfspaces(q);
  std::vector<Halfspace> rows = hp.rows;
  rows.insert(rows.end(), hq.rows.begin(), hq.rows.end());
  auto verts = enumerate_vertices(p.dim(), rows);
  if (verts.empty()) return std::nullopt;
  return Polytope::hull(verts, p.dim());
}

Polytope project(const Polytope& p, const Mat& frame) {
  if (frame.rows() != p.dim()) throw std::invalid_argument("frame dimension mismatch");
  int k = static_cast<int>(frame.cols());
  Mat g = frame.transpose() * frame - Mat::Identity(k, k);
  if (g.cwiseAbs().maxCoeff() >= 1e-10)
    throw std::invalid_argument("frame columns not orthonormal");
  std::vector<Vec> coords;
  for (const auto& v : p.vertices()) coords.push_back(frame.transpose() * v);
  return Polytope::hull(coords, k);
}

Polytope reflect(const Polytope& p) {
  return remap(p, [](const Vec& v) { return Vec(-v); });
}

Polytope scale(const Polytope& p, double t) {
  if (t < 0) throw std::invalid_argument("negative scale factor");
  if (t == 0) return Polytope::hull({Vec(Vec::Zero(p.dim()))}, p.dim());
  return remap(p, [t](const Vec& v) { return Vec(t * v); });
}

Polytope translate(const Polytope& p, const Vec& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("dimension mismatch");
  return remap(p, [&x](const Vec& v) { return Vec(v + x); });
}

Polytope rotate(const Polytope& p, const Rotation& r) {
  if (r.dim != p.dim()) throw std::invalid_argument("dimension mismatch");
  return remap(p, [&r](const Vec& v) { return r.apply(v); });
}

double support(const Polytope& p, const Vec& u) {
  if (u.size() != p.dim()) throw std::invalid_argument("dimension mismatch");
  if (u.norm() < 1e-15) throw std::invalid_argument("zero direction");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) best = std::max(best, u.dot(v));
  return best;
}

HalfspaceRep to_halfspaces(const Polytope& p) {
  double s = scale_of(p.vertices());
  if (affine_rank(p.vertices(), p.dim(), 1e-9 * s) < p.dim())
    throw std::invalid_argument("lower-dimensional body has no bounded halfspace form");
  HalfspaceRep h;
  h.dim = p.dim();
  h.rows = facets_of_points(p.dim(), p.vertices());
  for (auto& r : h.rows) {
    double n = r.normal.norm();
    r.normal /= n;
    r.offset /= n;
  }
  return h;
}

Polytope from_halfspaces(const HalfspaceRep& h) {
  int dim = h.dim;
  int m = static_cast<int>(h.rows.size());
  Mat A(m, dim);
  Vec b(m);
  for (int i = 0; i < m; ++i) {
    A.row(i) = h.rows[i].normal.transpose();
    b(i) = h.rows[i].offset;
  }
  for (int d = 0; d < dim; ++d)
    for (double sgn : {1.0, -1.0}) {
      Vec c = Vec::Zero(dim);
      c(d) = sgn;
      auto r = lp_solve(c, A, b);
      if (r.status == LpResult::kUnbounded)
        throw std::invalid_argument("unbounded region");
      if (r.status == LpResult::kInfeasible)
        throw std::invalid_argument("empty region");
    }
  auto verts = enumerate_vertices(dim, h.rows);
  if (verts.empty()) throw std::invalid_argument("empty region");
  return Polytope::hull(verts, dim);
}

}  // namespace valgeo

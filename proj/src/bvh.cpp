#include "l3e/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace l3e {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double box_area(const Eigen::Vector3d& bmin, const Eigen::Vector3d& bmax) {
  const Eigen::Vector3d d = (bmax - bmin).cwiseMax(0.0);
  return 2.0 * (d.x() * d.y() + d.y() * d.z() + d.z() * d.x());
}

// Slab test; returns entry distance (clamped at 0) or nothing.
inline std::optional<double> ray_box(const Eigen::Vector3d& o,
                                     const Eigen::Vector3d& inv_d,
                                     const Eigen::Vector3d& bmin,
                                     const Eigen::Vector3d& bmax,
                                     double t_max) {
  double t0 = 0.0, t1 = t_max;
  for (int a = 0; a < 3; ++a) {
    double lo = (bmin[a] - o[a]) * inv_d[a];
    double hi = (bmax[a] - o[a]) * inv_d[a];
    if (inv_d[a] < 0.0) std::swap(lo, hi);
    t0 = std::max(t0, lo);
    t1 = std::min(t1, hi);
    if (t0 > t1) return std::nullopt;
  }
  return t0;
}

double box_distance_sq(const Eigen::Vector3d& p, const Eigen::Vector3d& bmin,
                       const Eigen::Vector3d& bmax) {
  const Eigen::Vector3d d =
      (bmin - p).cwiseMax(0.0).cwiseMax(p - bmax);
  return d.squaredNorm();
}

}  // namespace

std::optional<double> ray_triangle(const Eigen::Vector3d& origin,
                                   const Eigen::Vector3d& direction,
                                   const Eigen::Vector3d& v0,
                                   const Eigen::Vector3d& e1,
                                   const Eigen::Vector3d& e2) {
  const Eigen::Vector3d pvec = direction.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < 1e-14) return std::nullopt;
  const double inv_det = 1.0 / det;
  const Eigen::Vector3d tvec = origin - v0;
  const double u = tvec.dot(pvec) * inv_det;
  if (u < -1e-12 || u > 1.0 + 1e-12) return std::nullopt;
  const Eigen::Vector3d qvec = tvec.cross(e1);
  const double v = direction.dot(qvec) * inv_det;
  if (v < -1e-12 || u + v > 1.0 + 1e-12) return std::nullopt;
  return e2.dot(qvec) * inv_det;
}

Eigen::Vector3d closest_point_on_triangle(const Eigen::Vector3d& p,
                                          const Eigen::Vector3d& a,
                                          const Eigen::Vector3d& b,
                                          const Eigen::Vector3d& c) {
  const Eigen::Vector3d ab = b - a, ac = c - a, ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Eigen::Vector3d bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return a + v * ab;
  }

  const Eigen::Vector3d cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return a + w * ac;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return b + w * (c - b);
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom, w = vc * denom;
  return a + v * ab + w * ac;
}

Bvh::Bvh(const TriangleMesh& mesh) {
  triangle_count_ = mesh.triangles.size();
  if (triangle_count_ == 0) return;

  v0_.reserve(triangle_count_);
  e1_.reserve(triangle_count_);
  e2_.reserve(triangle_count_);
  normal_.reserve(triangle_count_);
  centroid_.reserve(triangle_count_);
  for (const auto& t : mesh.triangles) {
    const Eigen::Vector3d& a = mesh.vertices[t[0]];
    const Eigen::Vector3d& b = mesh.vertices[t[1]];
    const Eigen::Vector3d& c = mesh.vertices[t[2]];
    v0_.push_back(a);
    e1_.push_back(b - a);
    e2_.push_back(c - a);
    normal_.push_back(e1_.back().cross(e2_.back()).normalized());
    centroid_.push_back((a + b + c) / 3.0);
  }

  std::vector<int> tris(triangle_count_);
  std::iota(tris.begin(), tris.end(), 0);
  nodes_.reserve(2 * triangle_count_);
  build(tris, 0, static_cast<int>(triangle_count_));
}

int Bvh::build(std::vector<int>& tris, int begin, int end) {
  Node node;
  node.bmin = Eigen::Vector3d::Constant(kInf);
  node.bmax = Eigen::Vector3d::Constant(-kInf);
  Eigen::Vector3d cmin = node.bmin, cmax = node.bmax;
  for (int i = begin; i < end; ++i) {
    const int t = tris[i];
    const Eigen::Vector3d a = v0_[t];
    const Eigen::Vector3d b = v0_[t] + e1_[t];
    const Eigen::Vector3d c = v0_[t] + e2_[t];
    node.bmin = node.bmin.cwiseMin(a).cwiseMin(b).cwiseMin(c);
    node.bmax = node.bmax.cwiseMax(a).cwiseMax(b).cwiseMax(c);
    cmin = cmin.cwiseMin(centroid_[t]);
    cmax = cmax.cwiseMax(centroid_[t]);
  }

  const int count = end - begin;
  const int node_index = static_cast<int>(nodes_.size());
  nodes_.push_back(node);

  if (count <= 4) {
    nodes_[node_index].first = static_cast<int>(tri_order_.size());
    nodes_[node_index].count = count;
    for (int i = begin; i < end; ++i) tri_order_.push_back(tris[i]);
    return node_index;
  }

  // Binned SAH on the widest centroid axis; median fallback.
  int axis;
  (cmax - cmin).maxCoeff(&axis);
  const double extent = cmax[axis] - cmin[axis];
  int mid = begin + count / 2;
  if (extent > 1e-12) {
    constexpr int kBins = 16;
    struct Bin {
      int count = 0;
      Eigen::Vector3d bmin = Eigen::Vector3d::Constant(kInf);
      Eigen::Vector3d bmax = Eigen::Vector3d::Constant(-kInf);
    };
    Bin bins[kBins];
    const double scale = kBins / extent;
    auto bin_of = [&](int t) {
      int b = static_cast<int>((centroid_[t][axis] - cmin[axis]) * scale);
      return std::clamp(b, 0, kBins - 1);
    };
    for (int i = begin; i < end; ++i) {
      const int t = tris[i];
      Bin& bin = bins[bin_of(t)];
      ++bin.count;
      const Eigen::Vector3d a = v0_[t];
      const Eigen::Vector3d b = v0_[t] + e1_[t];
      const Eigen::Vector3d c = v0_[t] + e2_[t];
      bin.bmin = bin.bmin.cwiseMin(a).cwiseMin(b).cwiseMin(c);
      bin.bmax = bin.bmax.cwiseMax(a).cwiseMax(b).cwiseMax(c);
    }
    double best_cost = kInf;
    int best_split = -1;
    for (int s = 1; s < kBins; ++s) {
      Eigen::Vector3d lmin = Eigen::Vector3d::Constant(kInf),
                      lmax = Eigen::Vector3d::Constant(-kInf),
                      rmin = lmin, rmax = lmax;
      int lcount = 0, rcount = 0;
      for (int b = 0; b < s; ++b) {
        if (bins[b].count == 0) continue;
        lcount += bins[b].count;
        lmin = lmin.cwiseMin(bins[b].bmin);
        lmax = lmax.cwiseMax(bins[b].bmax);
      }
      for (int b = s; b < kBins; ++b) {
        if (bins[b].count == 0) continue;
        rcount += bins[b].count;
        rmin = rmin.cwiseMin(bins[b].bmin);
        rmax = rmax.cwiseMax(bins[b].bmax);
      }
      if (lcount == 0 || rcount == 0) continue;
      const double cost =
          lcount * box_area(lmin, lmax) + rcount * box_area(rmin, rmax);
      if (cost < best_cost) {
        best_cost = cost;
        best_split = s;
      }
    }
    if (best_split > 0) {
      auto it = std::partition(tris.begin() + begin, tris.begin() + end,
                               [&](int t) { return bin_of(t) < best_split; });
      mid = static_cast<int>(it - tris.begin());
      if (mid == begin || mid == end) mid = begin + count / 2;
    }
  }
  if (mid == begin + count / 2) {
    std::nth_element(tris.begin() + begin, tris.begin() + mid,
                     tris.begin() + end, [&](int a, int b) {
                       return centroid_[a][axis] < centroid_[b][axis];
                     });
  }

  const int left = build(tris, begin, mid);
  const int right = build(tris, mid, end);
  nodes_[node_index].left = left;
  nodes_[node_index].right = right;
  return node_index;
}

std::optional<TriangleHit> Bvh::intersect(const Eigen::Vector3d& origin,
                                          const Eigen::Vector3d& direction,
                                          double t_min, double t_max) const {
  if (nodes_.empty()) return std::nullopt;
  const Eigen::Vector3d inv_d = direction.cwiseInverse();

  TriangleHit best;
  best.distance = t_max;
  bool found = false;

  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    const auto entry = ray_box(origin, inv_d, node.bmin, node.bmax, best.distance);
    if (!entry) continue;
    if (node.leaf()) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const int t = tri_order_[i];
        const auto hit = ray_triangle(origin, direction, v0_[t], e1_[t], e2_[t]);
        if (hit && *hit > t_min && *hit <= best.distance) {
          best.distance = *hit;
          best.triangle = t;
          best.normal = normal_[t];
          found = true;
        }
      }
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

double Bvh::distance(const Eigen::Vector3d& point) const {
  if (nodes_.empty()) return kInf;
  double best_sq = kInf;
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (box_distance_sq(point, node.bmin, node.bmax) >= best_sq) continue;
    if (node.leaf()) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const int t = tri_order_[i];
        const Eigen::Vector3d q = closest_point_on_triangle(
            point, v0_[t], v0_[t] + e1_[t], v0_[t] + e2_[t]);
        best_sq = std::min(best_sq, (point - q).squaredNorm());
      }
    } else {
      // Visit the nearer child first for tighter pruning.
      const double dl = box_distance_sq(point, nodes_[node.left].bmin,
                                        nodes_[node.left].bmax);
      const double dr = box_distance_sq(point, nodes_[node.right].bmin,
                                        nodes_[node.right].bmax);
      if (dl < dr) {
        stack[top++] = node.right;
        stack[top++] = node.left;
      } else {
        stack[top++] = node.left;
        stack[top++] = node.right;
      }
    }
  }
  return std::sqrt(best_sq);
}

}  // namespace l3e

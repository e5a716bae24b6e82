#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "l3e/mesh_io.hpp"

namespace l3e {

struct TriangleHit {
  double distance = 0.0;
  int triangle = -1;
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();  // geometric, unit, unoriented
};

// Bounding-volume hierarchy over a triangle mesh with binned SAH splits.
// Immutable after construction; queries are const and thread-safe.
class Bvh {
 public:
  Bvh() = default;
  explicit Bvh(const TriangleMesh& mesh);

  // Nearest two-sided intersection with t in (t_min, t_max].
  std::optional<TriangleHit> intersect(const Eigen::Vector3d& origin,
                                       const Eigen::Vector3d& direction,
                                       double t_min, double t_max) const;

  // Distance from a point to the closest triangle surface.
  double distance(const Eigen::Vector3d& point) const;

  bool empty() const { return triangle_count_ == 0; }
  std::size_t triangle_count() const { return triangle_count_; }

 private:
  struct Node {
    Eigen::Vector3d bmin, bmax;
    int left = -1;      // internal: child indices
    int right = -1;
    int first = 0;      // leaf: range into tri_order_
    int count = 0;
    bool leaf() const { return count > 0; }
  };

  int build(std::vector<int>& tris, int begin, int end);

  std::vector<Node> nodes_;
  std::vector<int> tri_order_;
  // Flattened triangle data for tight inner loops.
  std::vector<Eigen::Vector3d> v0_, e1_, e2_, normal_;
  std::vector<Eigen::Vector3d> centroid_;
  std::size_t triangle_count_ = 0;
};

// Closest point on a triangle (Ericson). Shared with test oracles.
Eigen::Vector3d closest_point_on_triangle(const Eigen::Vector3d& p,
                                          const Eigen::Vector3d& a,
                                          const Eigen::Vector3d& b,
                                          const Eigen::Vector3d& c);

// Two-sided Moeller-Trumbore; returns t or nothing.
std::optional<double> ray_triangle(const Eigen::Vector3d& origin,
                                   const Eigen::Vector3d& direction,
                                   const Eigen::Vector3d& v0,
                                   const Eigen::Vector3d& e1,
                                   const Eigen::Vector3d& e2);

}  // namespace l3e

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace l3e {

struct TriangleMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<Eigen::Vector3i> triangles;
};

// Binary mesh format: 8-byte magic "L3EMESH1", u32 vertex count, u32 triangle
// count, little-endian f32 vertex triples, u32 index triples.
TriangleMesh read_mesh(const std::string& path);
void write_mesh(const std::string& path, const TriangleMesh& mesh);

}  // namespace l3e

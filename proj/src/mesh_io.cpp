#include "l3e/mesh_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "l3e/errors.hpp"

namespace l3e {

namespace {
constexpr char kMagic[8] = {'L', '3', 'E', 'M', 'E', 'S', 'H', '1'};
}

TriangleMesh read_mesh(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open mesh file: " + path);

  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0) {
    throw DataError("bad mesh magic in " + path);
  }
  std::uint32_t n_vertices = 0, n_triangles = 0;
  in.read(reinterpret_cast<char*>(&n_vertices), 4);
  in.read(reinterpret_cast<char*>(&n_triangles), 4);
  if (!in) throw DataError("truncated mesh header in " + path);

  TriangleMesh mesh;
  mesh.vertices.reserve(n_vertices);
  std::vector<float> coords(static_cast<std::size_t>(n_vertices) * 3);
  in.read(reinterpret_cast<char*>(coords.data()),
          static_cast<std::streamsize>(coords.size() * sizeof(float)));
  if (!in) throw DataError("truncated vertex data in " + path);
  for (std::uint32_t i = 0; i < n_vertices; ++i) {
    mesh.vertices.emplace_back(coords[3 * i], coords[3 * i + 1],
                               coords[3 * i + 2]);
  }

  std::vector<std::uint32_t> idx(static_cast<std::size_t>(n_triangles) * 3);
  in.read(reinterpret_cast<char*>(idx.data()),
          static_cast<std::streamsize>(idx.size() * sizeof(std::uint32_t)));
  if (!in) throw DataError("truncated index data in " + path);
  mesh.triangles.reserve(n_triangles);
  for (std::uint32_t i = 0; i < n_triangles; ++i) {
    for (int k = 0; k < 3; ++k) {
      if (idx[3 * i + k] >= n_vertices) {
        throw DataError("mesh index out of range in " + path);
      }
    }
    mesh.triangles.emplace_back(static_cast<int>(idx[3 * i]),
                                static_cast<int>(idx[3 * i + 1]),
                                static_cast<int>(idx[3 * i + 2]));
  }
  return mesh;
}

void write_mesh(const std::string& path, const TriangleMesh& mesh) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write mesh file: " + path);
  out.write(kMagic, 8);
  const std::uint32_t n_vertices = static_cast<std::uint32_t>(mesh.vertices.size());
  const std::uint32_t n_triangles = static_cast<std::uint32_t>(mesh.triangles.size());
  out.write(reinterpret_cast<const char*>(&n_vertices), 4);
  out.write(reinterpret_cast<const char*>(&n_triangles), 4);
  for (const auto& v : mesh.vertices) {
    const float c[3] = {static_cast<float>(v.x()), static_cast<float>(v.y()),
                        static_cast<float>(v.z())};
    out.write(reinterpret_cast<const char*>(c), sizeof(c));
  }
  for (const auto& t : mesh.triangles) {
    const std::uint32_t c[3] = {static_cast<std::uint32_t>(t[0]),
                                static_cast<std::uint32_t>(t[1]),
                                static_cast<std::uint32_t>(t[2])};
    out.write(reinterpret_cast<const char*>(c), sizeof(c));
  }
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace l3e

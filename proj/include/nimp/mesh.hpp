#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nimp/error.hpp"
#include "nimp/rng.hpp"
#include "nimp/vec.hpp"

namespace nimp {

struct EmptyMesh : Error {
  using Error::Error;
};

// Indexed triangle soup. Triangle winding is kept exactly as stored in the
// source file; degenerate faces are removed at load time and counted in
// dropped_degenerate.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::string source_path;
  std::size_t dropped_degenerate = 0;

  std::array<Vec3, 3> triangle_vertices(std::size_t t) const {
    const auto& tri = triangles[t];
    return {vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]};
  }

  Aabb bounds() const {
    Aabb box;
    for (const Vec3& v : vertices) box.expand(v);
    return box;
  }
};

inline double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

// Maps model-space points into the unit sphere: p_normalized = scale * (p +
// translation). Inverse recovers model space.
struct NormalizationTransform {
  Vec3 translation{0.0, 0.0, 0.0};
  double scale = 1.0;

  Vec3 apply(const Vec3& p) const { return (p + translation) * scale; }
  Vec3 invert(const Vec3& p) const { return p / scale - translation; }
};

// Centers the mesh on its bounding-box center and scales it uniformly so that
// every vertex satisfies |v| <= 1 - padding. The scale is nudged down by ulps
// if rounding would push the farthest vertex over the bound.
inline std::pair<Mesh, NormalizationTransform> normalize_to_unit_sphere(
    const Mesh& mesh, double padding = 0.1) {
  if (mesh.vertices.empty() || mesh.triangles.empty())
    throw EmptyMesh("normalize_to_unit_sphere: empty mesh");

  const Vec3 translation = -mesh.bounds().center();
  double max_norm = 0.0;
  for (const Vec3& v : mesh.vertices)
    max_norm = std::max(max_norm, norm(v + translation));
  if (max_norm == 0.0) max_norm = 1.0;

  double scale = (1.0 - padding) / max_norm;
  for (int guard = 0; guard < 4; ++guard) {
    double worst = 0.0;
    for (const Vec3& v : mesh.vertices)
      worst = std::max(worst, norm((v + translation) * scale));
    if (worst <= 1.0 - padding) break;
    scale = std::nextafter(scale, 0.0);
  }

  NormalizationTransform transform{translation, scale};
  Mesh out = mesh;
  for (Vec3& v : out.vertices) v = transform.apply(v);
  return {std::move(out), transform};
}

// Area-uniform surface sampling: triangles chosen with probability
// proportional to area, barycentric coordinates uniform on the simplex.
// Deterministic for a given seed.
inline std::vector<Vec3> sample_surface(const Mesh& mesh, std::size_t count,
                                        std::uint64_t seed) {
  if (mesh.triangles.empty()) throw EmptyMesh("sample_surface: empty mesh");

  std::vector<double> cumulative(mesh.triangles.size());
  double total = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto [a, b, c] = mesh.triangle_vertices(t);
    total += triangle_area(a, b, c);
    cumulative[t] = total;
  }

  Rng rng(seed);
  std::vector<Vec3> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double pick = rng.uniform01() * total;
    const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), pick);
    const std::size_t t =
        std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                              mesh.triangles.size() - 1);
    const auto [a, b, c] = mesh.triangle_vertices(t);
    const double r1 = std::sqrt(rng.uniform01());
    const double r2 = rng.uniform01();
    points.push_back(a * (1.0 - r1) + b * (r1 * (1.0 - r2)) + c * (r1 * r2));
  }
  return points;
}

}  // namespace nimp

#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "vec.hpp"

namespace gss {

// Linear map from E^n to E^3 used to draw surfaces that live in E^4.
class Projection {
 public:
  // Identity on E^3.
  static Projection identity3() { return Projection({VecN{1, 0, 0}, VecN{0, 1, 0}, VecN{0, 0, 1}}); }
  // E^n -> E^{n-1} by deleting coordinate `index` (0-based).
  static Projection drop(std::size_t n, std::size_t index) {
    if (n != 4) throw SpecError("coordinate-drop projection is defined for E^4 only");
    if (index >= n) throw SpecError("coordinate-drop index out of range");
    std::vector<VecN> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (i != index) rows.push_back(VecN::basis(n, i));
    return Projection(rows);
  }
  // Orthographic projection onto the 3-plane spanned by three vectors (orthonormalized in order).
  static Projection onto_plane(std::vector<VecN> spanning) {
    if (spanning.size() != 3) throw SpecError("plane projection needs exactly three spanning vectors");
    std::vector<VecN> rows;
    for (VecN w : spanning) {
      for (int pass = 0; pass < 2; ++pass)
        for (const VecN& r : rows) w -= dot(w, r) * r;
      const double len = norm(w);
      if (!(len > 1e-12)) throw SpecError("plane projection: spanning vectors are linearly dependent");
      rows.push_back(w / len);
    }
    return Projection(rows);
  }

  std::size_t source_dim() const { return rows_[0].dim(); }
  VecN apply(const VecN& x) const { return VecN{dot(rows_[0], x), dot(rows_[1], x), dot(rows_[2], x)}; }

 private:
  explicit Projection(std::vector<VecN> rows) : rows_(std::move(rows)) {}
  std::vector<VecN> rows_;
};

struct TriangleMesh {
  std::vector<VecN> vertices;                      // projected to E^3, row-major grid order
  std::vector<bool> vertex_valid;                  // false when the position was not evaluable
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
  std::size_t skipped_triangles = 0;
};

// Splits each grid quad (i,j)-(i+1,j)-(i+1,j+1)-(i,j+1) into two triangles; triangles with a
// missing vertex or (near) zero area are skipped and counted.
inline TriangleMesh build_mesh(const std::vector<GridPoint>& grid, std::size_t nu, std::size_t nv,
                               const Projection& proj) {
  if (grid.size() != nu * nv) throw SpecError("mesh: grid size does not match nu x nv");
  TriangleMesh mesh;
  double extent = 0.0;
  for (const GridPoint& p : grid) {
    if (p.X) {
      if (p.X->dim() != proj.source_dim()) throw DimensionError(p.X->dim(), proj.source_dim());
      mesh.vertices.push_back(proj.apply(*p.X));
      mesh.vertex_valid.push_back(true);
      extent = std::fmax(extent, max_abs(mesh.vertices.back()));
    } else {
      mesh.vertices.push_back(VecN{0.0, 0.0, 0.0});
      mesh.vertex_valid.push_back(false);
    }
  }
  const double min_area = 1e-14 * std::fmax(extent * extent, 1e-300);
  auto idx = [nv](std::size_t i, std::size_t j) { return i * nv + j; };
  auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (!mesh.vertex_valid[a] || !mesh.vertex_valid[b] || !mesh.vertex_valid[c]) {
      ++mesh.skipped_triangles;
      return;
    }
    const double area = 0.5 * norm(cross(mesh.vertices[b] - mesh.vertices[a], mesh.vertices[c] - mesh.vertices[a]));
    if (!(area > min_area)) {
      ++mesh.skipped_triangles;
      return;
    }
    mesh.faces.push_back({a, b, c});
  };
  for (std::size_t i = 0; i + 1 < nu; ++i)
    for (std::size_t j = 0; j + 1 < nv; ++j) {
      emit(idx(i, j), idx(i + 1, j), idx(i + 1, j + 1));
      emit(idx(i, j), idx(i + 1, j + 1), idx(i, j + 1));
    }
  return mesh;
}

// `v` lines, then `f` lines with 1-based indices.
inline void write_obj(std::ostream& os, const TriangleMesh& mesh) {
  for (const VecN& v : mesh.vertices) os << "v " << io::fmt(v[0]) << ' ' << io::fmt(v[1]) << ' ' << io::fmt(v[2]) << '\n';
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

}  // namespace gss

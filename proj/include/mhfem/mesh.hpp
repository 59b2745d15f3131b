#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace mhfem {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Oriented mesh edge. Nodes satisfy a < b; the unit normal is the edge
/// vector (b - a) rotated clockwise. tri[1] == -1 on boundary edges.
struct Edge {
  int a = -1;
  int b = -1;
  std::array<int, 2> tri = {-1, -1};
};

/// Uniform right-triangle mesh of the unit square. Every cell is split by
/// the diagonal running from its lower-left to its upper-right corner, and
/// nodes are numbered lexicographically with x running fastest.
struct Mesh {
  int n = 0;       // cells per side
  double h = 0.0;  // 1/n

  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> tri_edges;      // edge opposite local vertex i
  std::vector<std::array<int, 3>> tri_edge_sign;  // +1 if edge normal points out of the triangle
  std::vector<char> boundary_node;
  std::vector<int> interior_index;  // node -> interior dof, -1 on boundary
  std::vector<int> interior_nodes;  // interior dof -> node

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_interior() const { return static_cast<int>(interior_nodes.size()); }
  double tri_area() const { return 0.5 * h * h; }

  Vec2 centroid(int t) const {
    const auto& tri = triangles[t];
    return {(nodes[tri[0]].x + nodes[tri[1]].x + nodes[tri[2]].x) / 3.0,
            (nodes[tri[0]].y + nodes[tri[1]].y + nodes[tri[2]].y) / 3.0};
  }
  double edge_length(int e) const;
  Vec2 edge_normal(int e) const;  // unit normal, global orientation
  Vec2 edge_midpoint(int e) const;
};

/// Build the uniform triangulation with n cells per side. Throws on n < 1.
Mesh build_uniform_mesh(int n);

/// Scatter an interior-dof vector to all mesh nodes (zero on the boundary).
std::vector<double> scatter_to_nodes(const Mesh& mesh, const std::vector<double>& interior);

/// Restrict a full nodal vector to the interior dofs.
std::vector<double> restrict_to_interior(const Mesh& mesh, const std::vector<double>& nodal);

}  // namespace mhfem

#include "mhfem/mesh.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace mhfem {

double Mesh::edge_length(int e) const {
  const Edge& ed = edges[e];
  const Vec2 d = nodes[ed.b] - nodes[ed.a];
  return std::sqrt(dot(d, d));
}

Vec2 Mesh::edge_normal(int e) const {
  const Edge& ed = edges[e];
  const Vec2 d = nodes[ed.b] - nodes[ed.a];
  const double len = std::sqrt(dot(d, d));
  return {d.y / len, -d.x / len};
}

Vec2 Mesh::edge_midpoint(int e) const {
  const Edge& ed = edges[e];
  return 0.5 * (nodes[ed.a] + nodes[ed.b]);
}

Mesh build_uniform_mesh(int n) {
  if (n < 1) throw std::invalid_argument("build_uniform_mesh: n must be >= 1");

  Mesh mesh;
  mesh.n = n;
  mesh.h = 1.0 / n;

  const int np = n + 1;
  mesh.nodes.resize(static_cast<std::size_t>(np) * np);
  for (int j = 0; j < np; ++j)
    for (int i = 0; i < np; ++i)
      mesh.nodes[static_cast<std::size_t>(j) * np + i] = {static_cast<double>(i) / n,
                                                          static_cast<double>(j) / n};

  mesh.triangles.reserve(static_cast<std::size_t>(2) * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int p00 = j * np + i;
      const int p10 = p00 + 1;
      const int p01 = p00 + np;
      const int p11 = p01 + 1;
      mesh.triangles.push_back({p00, p10, p11});  // below the diagonal
      mesh.triangles.push_back({p00, p11, p01});  // above the diagonal
    }
  }

  // Edge table keyed by the sorted node pair; first-touch order fixes the
  // global edge numbering deterministically.
  std::map<std::pair<int, int>, int> edge_of;
  mesh.tri_edges.resize(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    for (int v = 0; v < 3; ++v) {
      const int a = tri[(v + 1) % 3];
      const int b = tri[(v + 2) % 3];
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      auto it = edge_of.find(key);
      int e;
      if (it == edge_of.end()) {
        e = mesh.num_edges();
        edge_of.emplace(key, e);
        mesh.edges.push_back({key.first, key.second, {static_cast<int>(t), -1}});
      } else {
        e = it->second;
        mesh.edges[e].tri[1] = static_cast<int>(t);
      }
      mesh.tri_edges[t][v] = e;
    }
  }

  mesh.tri_edge_sign.resize(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const Vec2 c = mesh.centroid(static_cast<int>(t));
    for (int v = 0; v < 3; ++v) {
      const int e = mesh.tri_edges[t][v];
      const Vec2 nrm = mesh.edge_normal(e);
      const Vec2 to_edge = mesh.edge_midpoint(e) - c;
      mesh.tri_edge_sign[t][v] = dot(nrm, to_edge) > 0.0 ? 1 : -1;
    }
  }

  mesh.boundary_node.resize(mesh.nodes.size());
  mesh.interior_index.assign(mesh.nodes.size(), -1);
  for (int j = 0; j < np; ++j) {
    for (int i = 0; i < np; ++i) {
      const int idx = j * np + i;
      const bool bd = (i == 0 || i == n || j == 0 || j == n);
      mesh.boundary_node[idx] = bd ? 1 : 0;
      if (!bd) {
        mesh.interior_index[idx] = static_cast<int>(mesh.interior_nodes.size());
        mesh.interior_nodes.push_back(idx);
      }
    }
  }
  return mesh;
}

std::vector<double> scatter_to_nodes(const Mesh& mesh, const std::vector<double>& interior) {
  if (interior.size() != static_cast<std::size_t>(mesh.num_interior()))
    throw std::invalid_argument("scatter_to_nodes: size mismatch");
  std::vector<double> nodal(mesh.nodes.size(), 0.0);
  for (int d = 0; d < mesh.num_interior(); ++d) nodal[mesh.interior_nodes[d]] = interior[d];
  return nodal;
}

std::vector<double> restrict_to_interior(const Mesh& mesh, const std::vector<double>& nodal) {
  if (nodal.size() != mesh.nodes.size())
    throw std::invalid_argument("restrict_to_interior: size mismatch");
  std::vector<double> interior(mesh.num_interior());
  for (int d = 0; d < mesh.num_interior(); ++d) interior[d] = nodal[mesh.interior_nodes[d]];
  return interior;
}

}  // namespace mhfem

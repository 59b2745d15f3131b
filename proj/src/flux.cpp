#include "mhfem/flux.hpp"

#include <stdexcept>

namespace mhfem {

Vec2 p1_gradient(const Mesh& mesh, const std::vector<double>& nodal, int tri) {
  const auto& t = mesh.triangles[tri];
  const Vec2 p0 = mesh.nodes[t[0]];
  const Vec2 p1 = mesh.nodes[t[1]];
  const Vec2 p2 = mesh.nodes[t[2]];
  const double area2 = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
  const double bx[3] = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
  const double by[3] = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
  Vec2 g{0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    g.x += nodal[t[i]] * bx[i] / area2;
    g.y += nodal[t[i]] * by[i] / area2;
  }
  return g;
}

Rt0Field reconstruct_rt0(const Mesh& mesh, const std::vector<double>& nodal,
                         const Coefficient& nu) {
  if (nodal.size() != mesh.nodes.size())
    throw std::invalid_argument("reconstruct_rt0: expected a full nodal field");
  Rt0Field f;
  f.mesh = &mesh;
  f.edge_flux.resize(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& ed = mesh.edges[e];
    const Vec2 nrm = mesh.edge_normal(e);
    double acc = 0.0;
    int count = 0;
    for (int side = 0; side < 2; ++side) {
      const int t = ed.tri[side];
      if (t < 0) continue;
      const Vec2 c = mesh.centroid(t);
      const Vec2 g = p1_gradient(mesh, nodal, t);
      acc += nu(c.x, c.y) * dot(g, nrm);
      ++count;
    }
    f.edge_flux[e] = acc / count;
  }
  return f;
}

Rt0Field scaled(const Rt0Field& f, double factor) {
  Rt0Field out = f;
  for (double& v : out.edge_flux) v *= factor;
  return out;
}

Vec2 rt0_value(const Rt0Field& f, int tri, Vec2 p) {
  const Mesh& mesh = *f.mesh;
  const auto& t = mesh.triangles[tri];
  const double area = mesh.tri_area();
  Vec2 val{0.0, 0.0};
  for (int v = 0; v < 3; ++v) {
    const int e = mesh.tri_edges[tri][v];
    const double len = mesh.edge_length(e);
    const double coeff =
        mesh.tri_edge_sign[tri][v] * f.edge_flux[e] * len / (2.0 * area);
    const Vec2 opp = mesh.nodes[t[v]];  // vertex opposite edge e
    val.x += coeff * (p.x - opp.x);
    val.y += coeff * (p.y - opp.y);
  }
  return val;
}

std::vector<double> rt0_divergence(const Rt0Field& f) {
  const Mesh& mesh = *f.mesh;
  std::vector<double> div(mesh.num_triangles(), 0.0);
  const double area = mesh.tri_area();
  for (int tri = 0; tri < mesh.num_triangles(); ++tri) {
    double acc = 0.0;
    for (int v = 0; v < 3; ++v) {
      const int e = mesh.tri_edges[tri][v];
      acc += mesh.tri_edge_sign[tri][v] * f.edge_flux[e] * mesh.edge_length(e);
    }
    div[tri] = acc / area;
  }
  return div;
}

}  // namespace mhfem

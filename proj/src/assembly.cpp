#include "mhfem/assembly.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace mhfem {

namespace {

struct ElementGeometry {
  double area;
  std::array<double, 3> bx;  // gradient components: grad phi_i = (bx, by) / (2 area)
  std::array<double, 3> by;
};

ElementGeometry element_geometry(const Mesh& mesh, int t) {
  const auto& tri = mesh.triangles[t];
  const Vec2 p0 = mesh.nodes[tri[0]];
  const Vec2 p1 = mesh.nodes[tri[1]];
  const Vec2 p2 = mesh.nodes[tri[2]];
  ElementGeometry g;
  g.area = 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
  g.bx = {p1.y - p2.y, p2.y - p0.y, p0.y - p1.y};
  g.by = {p2.x - p1.x, p0.x - p2.x, p1.x - p0.x};
  return g;
}

FemMatrices assemble_impl(const Mesh& mesh, const Coefficient& sigma, const Coefficient& nu,
                          bool interior_only) {
  const int dim = interior_only ? mesh.num_interior() : mesh.num_nodes();
  auto dof_of = [&](int node) { return interior_only ? mesh.interior_index[node] : node; };

  std::vector<SparseMatrix::Triplet> tm, tms, tk;
  tm.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 9);
  tms.reserve(tm.capacity());
  tk.reserve(tm.capacity());

  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const ElementGeometry g = element_geometry(mesh, t);
    const Vec2 c = mesh.centroid(t);
    const double sig = sigma(c.x, c.y);
    const double vis = nu(c.x, c.y);
    if (!(sig > 0.0) || !(vis > 0.0))
      throw std::invalid_argument("assemble: coefficient sample not strictly positive");

    const auto& tri = mesh.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const int di = dof_of(tri[i]);
      if (di < 0) continue;
      for (int j = 0; j < 3; ++j) {
        const int dj = dof_of(tri[j]);
        if (dj < 0) continue;
        const double mass = g.area / 12.0 * (i == j ? 2.0 : 1.0);
        const double stiff = vis * (g.bx[i] * g.bx[j] + g.by[i] * g.by[j]) / (4.0 * g.area);
        tm.push_back({di, dj, mass});
        tms.push_back({di, dj, sig * mass});
        tk.push_back({di, dj, stiff});
      }
    }
  }

  FemMatrices mats;
  mats.dim = dim;
  mats.M = SparseMatrix::from_triplets(dim, dim, std::move(tm));
  mats.M_sigma = SparseMatrix::from_triplets(dim, dim, std::move(tms));
  mats.K_nu = SparseMatrix::from_triplets(dim, dim, std::move(tk));
  return mats;
}

}  // namespace

FemMatrices assemble(const Mesh& mesh, const Coefficient& sigma, const Coefficient& nu) {
  return assemble_impl(mesh, sigma, nu, true);
}

FemMatrices assemble_full(const Mesh& mesh, const Coefficient& sigma, const Coefficient& nu) {
  return assemble_impl(mesh, sigma, nu, false);
}

const TriQuadRule& midedge_rule() {
  static const TriQuadRule rule{{
      {0.5, 0.5, 0.0, 1.0 / 3.0},
      {0.0, 0.5, 0.5, 1.0 / 3.0},
      {0.5, 0.0, 0.5, 1.0 / 3.0},
  }};
  return rule;
}

const TriQuadRule& degree5_rule() {
  // Radon's rule: centroid plus two symmetric orbits.
  static const TriQuadRule rule = [] {
    TriQuadRule r;
    const double a = (6.0 + std::sqrt(15.0)) / 21.0;
    const double b = (6.0 - std::sqrt(15.0)) / 21.0;
    const double wa = (155.0 + std::sqrt(15.0)) / 1200.0;
    const double wb = (155.0 - std::sqrt(15.0)) / 1200.0;
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0});
    r.points.push_back({a, a, 1.0 - 2.0 * a, wa});
    r.points.push_back({a, 1.0 - 2.0 * a, a, wa});
    r.points.push_back({1.0 - 2.0 * a, a, a, wa});
    r.points.push_back({b, b, 1.0 - 2.0 * b, wb});
    r.points.push_back({b, 1.0 - 2.0 * b, b, wb});
    r.points.push_back({1.0 - 2.0 * b, b, b, wb});
    return r;
  }();
  return rule;
}

std::vector<double> assemble_load(const Mesh& mesh, const Coefficient& g) {
  return assemble_load(mesh, g, midedge_rule());
}

std::vector<double> assemble_load(const Mesh& mesh, const Coefficient& g,
                                  const TriQuadRule& rule) {
  std::vector<double> load(mesh.num_interior(), 0.0);
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    const Vec2 p0 = mesh.nodes[tri[0]];
    const Vec2 p1 = mesh.nodes[tri[1]];
    const Vec2 p2 = mesh.nodes[tri[2]];
    const double area = mesh.tri_area();
    for (const auto& q : rule.points) {
      const double x = q.l0 * p0.x + q.l1 * p1.x + q.l2 * p2.x;
      const double y = q.l0 * p0.y + q.l1 * p1.y + q.l2 * p2.y;
      const double gv = g(x, y) * q.w * area;
      const std::array<double, 3> phi = {q.l0, q.l1, q.l2};
      for (int i = 0; i < 3; ++i) {
        const int d = mesh.interior_index[tri[i]];
        if (d >= 0) load[d] += gv * phi[i];
      }
    }
  }
  return load;
}

}  // namespace mhfem

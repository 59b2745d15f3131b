#pragma once

#include <vector>

#include "mhfem/assembly.hpp"
#include "mhfem/mesh.hpp"

namespace mhfem {

/// Lowest-order Raviart-Thomas field with one normal-flux value per edge,
/// oriented by the global edge normal. The normal component is single-valued
/// across interior edges by construction.
struct Rt0Field {
  const Mesh* mesh = nullptr;
  std::vector<double> edge_flux;  // normal component value on each edge
};

/// Constant gradient of a P1 nodal field on a triangle.
Vec2 p1_gradient(const Mesh& mesh, const std::vector<double>& nodal, int tri);

/// RT0 extension of the piecewise-constant flux nu grad(v): each edge dof is
/// the mean of the adjacent triangles' normal fluxes (the single value on
/// boundary edges).
Rt0Field reconstruct_rt0(const Mesh& mesh, const std::vector<double>& nodal,
                         const Coefficient& nu);

Rt0Field scaled(const Rt0Field& f, double factor);

/// Value of the RT0 field at a point of triangle `tri`.
Vec2 rt0_value(const Rt0Field& f, int tri, Vec2 p);

/// Piecewise-constant divergence, one value per triangle.
std::vector<double> rt0_divergence(const Rt0Field& f);

}  // namespace mhfem

#pragma once

#include <functional>
#include <vector>

#include "mhfem/mesh.hpp"
#include "mhfem/sparse.hpp"

namespace mhfem {

using Coefficient = std::function<double(double, double)>;

inline Coefficient constant_coefficient(double value) {
  return [value](double, double) { return value; };
}

/// P1 mass, weighted mass and stiffness matrices restricted to interior dofs.
struct FemMatrices {
  SparseMatrix M;
  SparseMatrix M_sigma;
  SparseMatrix K_nu;
  int dim = 0;
};

/// Assemble interior-dof FE matrices. Coefficients are sampled at triangle
/// centroids and must be strictly positive there.
FemMatrices assemble(const Mesh& mesh, const Coefficient& sigma, const Coefficient& nu);

/// Same matrices without the Dirichlet restriction (all nodes kept).
FemMatrices assemble_full(const Mesh& mesh, const Coefficient& sigma, const Coefficient& nu);

/// Symmetric quadrature rule on the reference triangle in barycentric form.
struct TriQuadRule {
  struct Point {
    double l0, l1, l2;  // barycentric coordinates
    double w;           // weight, sums to 1 over the rule
  };
  std::vector<Point> points;
};

/// Three-point mid-edge rule, exact for quadratics.
const TriQuadRule& midedge_rule();
/// Seven-point rule, exact for quintics.
const TriQuadRule& degree5_rule();

/// Load vector over interior dofs with entries int g phi_j, mid-edge rule.
std::vector<double> assemble_load(const Mesh& mesh, const Coefficient& g);

/// Load vector with a caller-chosen quadrature rule.
std::vector<double> assemble_load(const Mesh& mesh, const Coefficient& g, const TriQuadRule& rule);

}  // namespace mhfem

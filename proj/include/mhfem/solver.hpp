#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "mhfem/assembly.hpp"
#include "mhfem/fourier.hpp"
#include "mhfem/mesh.hpp"
#include "mhfem/sparse.hpp"

namespace mhfem {

struct CoefficientBounds {
  double lower = 1.0;
  double upper = 1.0;
};

/// Full description of one time-periodic optimal control problem.
struct ProblemSpec {
  Coefficient sigma = constant_coefficient(1.0);
  Coefficient nu = constant_coefficient(1.0);
  CoefficientBounds sigma_bounds;
  CoefficientBounds nu_bounds;
  double lambda = 0.1;
  double T = 2.0 * M_PI;
  double omega = 1.0;  // 2 pi / T
  double friedrichs = 1.0 / (std::sqrt(2.0) * M_PI);
  std::shared_ptr<const DesiredState> desired_state;
  int truncation = 8;  // N

  void validate() const;
};

/// Assembled matrices plus their mesh, shared by all modes of one run.
struct Discretization {
  const Mesh* mesh = nullptr;
  FemMatrices mats;
};

Discretization discretize(const ProblemSpec& spec, const Mesh& mesh);

/// Saddle-point system of one mode, paired with its right-hand side built
/// from the desired-state loads.
BlockSystem build_mode_system(const ProblemSpec& spec, const Discretization& disc, int k);

/// State, adjoint, and derived control coefficients of one solved mode.
struct ModeSolution {
  ModalField y;
  ModalField p;
  ModalField u;  // u = -p / lambda
  int iterations = 0;
  bool converged = false;
  double seconds = 0.0;
};

struct MhSolution {
  std::vector<ModeSolution> modes;  // index k = 0..N
  int truncation() const { return static_cast<int>(modes.size()) - 1; }
};

/// Solve modes 0..N independently (optionally on a worker pool) and derive
/// the control. Results are identical for any worker count.
MhSolution solve_all_modes(const ProblemSpec& spec, const Discretization& disc, double tol,
                           int max_iter = 2000, int workers = 1);

/// Modal cost of an MhFE pair:
/// J = T J_0 + (T/2) sum J_k + E_N / 2 with
/// J_k = 1/2 ||y_k - y_d,k||^2 + lambda/2 ||u_k||^2.
struct CostBreakdown {
  std::vector<double> per_mode;  // J_k, unweighted
  double remainder = 0.0;        // E_N
  double total = 0.0;
};

CostBreakdown evaluate_cost(const ProblemSpec& spec, const Discretization& disc,
                            const MhSolution& sol);

/// Squared Omega-norm of y_k - y_d,k over both trigonometric components,
/// with the data evaluated from its closed-form modal coefficients.
double modal_misfit_sq(const Mesh& mesh, const ModalField& field, const DesiredState& yd);

}  // namespace mhfem

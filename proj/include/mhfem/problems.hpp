#pragma once

#include <cmath>
#include <memory>
#include <vector>

#include "mhfem/solver.hpp"

namespace mhfem {

/// Linear combination of e^t cos(m t) and e^t sin(m t) terms on [0, 2 pi].
/// Fourier coefficients come out in closed form, so modal data and series
/// tails are exact to round-off.
class ExpTrigSignal {
 public:
  struct Term {
    double amplitude;
    int frequency;
    bool is_sine;
  };

  explicit ExpTrigSignal(std::vector<Term> terms) : terms_(std::move(terms)) {}

  double value(double t) const;
  double derivative_value(double t) const;
  double second_derivative_value(double t) const;
  double cos_coeff(int k) const;  // k = 0 gives the mean
  double sin_coeff(int k) const;

 private:
  std::vector<Term> terms_;
};

/// One of the three benchmark problems.
struct ExampleDefinition {
  int id = 1;
  double lambda = 0.1;
  double T = 2.0 * M_PI;
  double omega = 1.0;
  int default_truncation = 8;
  bool has_exact_solution = true;
  std::shared_ptr<const DesiredState> desired_state;
  std::shared_ptr<const ExpTrigSignal> yd_signal;     // ids 1, 2
  std::shared_ptr<const ExpTrigSignal> state_signal;  // ids 1, 2
};

ExampleDefinition make_example(int id);

/// Problem spec with unit coefficients on the unit square; truncation < 0
/// selects the example default.
ProblemSpec make_problem(const ExampleDefinition& def, int truncation = -1);

/// sin(pi x) sin(pi y), the spatial profile shared by examples 1 and 2.
double spatial_profile(double x, double y);

// Pointwise space-time evaluation (ids 1 and 2; desired state also for id 3).
double exact_state_value(const ExampleDefinition& def, Vec2 x, double t);
double exact_control_value(const ExampleDefinition& def, Vec2 x, double t);
double exact_adjoint_value(const ExampleDefinition& def, Vec2 x, double t);
double desired_state_value(const ExampleDefinition& def, Vec2 x, double t);

/// Scalar coefficients of the exact modal solution: mode k of the state is
/// (yc + ys)·profile, of the adjoint (pc + ps)·profile. Derived by solving
/// the per-mode optimality relations on the Laplace eigenfunction profile.
struct ExactModalCoeffs {
  double yc = 0.0;
  double ys = 0.0;
  double pc = 0.0;
  double ps = 0.0;
};

ExactModalCoeffs exact_mode_coeffs(const ExampleDefinition& def, int k);

/// Exact per-mode cost contribution J_k (ids 1, 2).
double exact_mode_cost(const ExampleDefinition& def, int k);

/// Exact optimal cost, modal series summed to round-off (ids 1, 2).
double exact_cost(const ExampleDefinition& def);

/// Combined |.|_{1,1/2} contribution of all exact modes beyond N (ids 1, 2).
double exact_tail_seminorm_sq(const ExampleDefinition& def, int N);

/// Gradient and L2 norms of the modal error pair (y_k, p_k) - (eta_k, zeta_k),
/// all trigonometric components combined.
struct ModalErrorNorms {
  double grad_sq = 0.0;
  double l2_sq = 0.0;
};

/// Error against the exact modal solution (ids 1, 2). `plain` must hold
/// unit-coefficient mass/stiffness matrices on the same mesh.
ModalErrorNorms exact_modal_error(const ExampleDefinition& def, const Mesh& mesh,
                                  const FemMatrices& plain, const ModeSolution& mode);

/// Interpolate a coarse interior field onto the nested refinement (fine.n
/// must equal 2 * coarse.n); returns fine interior dofs.
std::vector<double> prolongate(const Mesh& coarse, const Mesh& fine,
                               const std::vector<double>& coarse_interior);

/// Error of a coarse modal solve against a same-mode fine-grid reference.
ModalErrorNorms reference_modal_error(const Mesh& coarse, const ModeSolution& coarse_mode,
                                      const Mesh& fine, const FemMatrices& fine_plain,
                                      const ModeSolution& fine_mode);

}  // namespace mhfem

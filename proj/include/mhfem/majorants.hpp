#pragma once

#include <array>
#include <vector>

#include "mhfem/flux.hpp"
#include "mhfem/solver.hpp"

namespace mhfem {

/// Stability constants of the coupled optimality bilinear form.
struct StabilityConstants {
  double mu1 = 0.0;        // inf-sup constant for the full norm
  double mu2 = 0.0;        // sup-sup constant for the full norm
  double mu1_tilde = 0.0;  // inf-sup constant for the seminorm
  double mu2_tilde = 0.0;
  double mu1_under = 0.0;  // boundary-value-problem constant used by the cost majorant
  double friedrichs = 0.0;

  static StabilityConstants from(const ProblemSpec& spec);
};

/// RT0 flux pair (cosine/sine) of one mode.
struct ModalFluxPair {
  Rt0Field cosine;
  Rt0Field sine;  // empty for mode 0
};

/// tau_k: RT0 extension of nu grad y_k for every mode of the solution.
std::vector<ModalFluxPair> state_fluxes(const Mesh& mesh, const ProblemSpec& spec,
                                        const MhSolution& sol);
/// rho_k: RT0 extension of -nu grad p_k.
std::vector<ModalFluxPair> adjoint_fluxes(const Mesh& mesh, const ProblemSpec& spec,
                                          const MhSolution& sol);

/// Squared Omega-norms of the four optimality-system residuals per mode,
/// cosine and sine components combined.
struct ModalResiduals {
  std::vector<double> r1_sq;
  std::vector<double> r2_sq;
  std::vector<double> r3_sq;
  std::vector<double> r4_sq;
  int n_modes() const { return static_cast<int>(r1_sq.size()); }
};

ModalResiduals modal_residuals(const Mesh& mesh, const ProblemSpec& spec,
                               const MhSolution& approx, const std::vector<ModalFluxPair>& tau,
                               const std::vector<ModalFluxPair>& rho);

/// Majorant of the combined state/co-state seminorm error. `total` follows
/// the per-mode display normalization (factor sqrt(2)); `total_theorem`
/// carries the full inf-sup constant, which differs from the display once
/// min(lambda, 1/lambda) < 1.
struct SeminormMajorant {
  double total = 0.0;
  double total_theorem = 0.0;
  std::vector<double> per_mode;
  std::array<double, 4> group_sums_sq = {0.0, 0.0, 0.0, 0.0};  // T-weighted residual sums
};

SeminormMajorant majorant_seminorm(const ModalResiduals& res, const StabilityConstants& consts,
                                   double remainder, double T);

/// Majorant of the full space-time norm error (Theorem constant mu1).
double majorant_full_norm(const ModalResiduals& res, const StabilityConstants& consts,
                          double remainder, double T);

/// Closed-form minimizer of (1+a)A + (1+a)(1+b)/a (X + Y/b) over a, b > 0.
/// Degenerate inputs resolve to their limits; infinite parameters mark a
/// term that was optimized away entirely.
struct YoungOpt {
  double alpha = 0.0;
  double beta = 0.0;
  double value = 0.0;
};

YoungOpt optimize_young(double misfit_half_sq, double x_term, double y_term);

/// Cost-functional majorant J+ with per-mode optimized Young parameters.
struct CostMajorant {
  double total = 0.0;
  std::vector<double> per_mode;  // unweighted J+_k
  std::vector<double> alpha;
  std::vector<double> beta;
  double remainder = 0.0;
};

CostMajorant cost_majorant(const Mesh& mesh, const ProblemSpec& spec, const MhSolution& sol,
                           const std::vector<ModalFluxPair>& tau,
                           const StabilityConstants& consts);

/// Ratio majorant / reference; NaN when the reference vanishes.
double efficiency_index(double majorant, double reference);

}  // namespace mhfem

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mhfem/sparse.hpp"

namespace mhfem {

/// One Fourier mode of a scalar field: nodal cosine and sine coefficient
/// vectors. The sine part is empty for k = 0.
struct ModalField {
  int k = 0;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  static ModalField zero(int k, int dim);
  bool has_sine() const { return k > 0; }
};

/// Coefficients of the function orthogonal to f: (cos', sin') = (f_sin, -f_cos).
/// Applying it twice negates the field. Rejects k = 0.
ModalField perp(const ModalField& f);

ModalField scaled(const ModalField& f, double factor);

/// T-weighted modal contributions to the space-time norms: the k = 0 mode
/// carries weight T, higher modes T/2, and the half-order time seminorm
/// weights each mode by k omega.
struct SpectralNorms {
  double l2_sq = 0.0;
  double grad_sq = 0.0;
  double half_time_sq = 0.0;
};

SpectralNorms modal_l2_norms(const ModalField& f, const SparseMatrix& mass,
                             const SparseMatrix& stiffness, double T, double omega);

/// Desired-state data in separable modal form: y_d mode k equals
/// (cos_weight(k), sin_weight(k)) times a fixed spatial profile.
class DesiredState {
 public:
  virtual ~DesiredState() = default;
  virtual double cos_weight(int k) const = 0;
  virtual double sin_weight(int k) const = 0;
  virtual double profile(double x, double y) const = 0;
  virtual double profile_l2_sq() const = 0;  // int profile^2 over Omega, exact
  /// Sum of squared modal weights beyond N; the default walks the series
  /// until the increments are negligible. Override when a closed form exists.
  virtual double tail_weight_sq(int N) const;
};

/// Remainder term E_N = (T/2) sum_{k>N} ||y_d,k||^2_Omega.
double remainder_term(const DesiredState& yd, int N, double T);

/// Fourier coefficients (c_k, s_k) of a scalar time signal on [0, T],
/// computed by panel Gauss quadrature refined to ~1e-10 absolute accuracy.
struct TimeCoefficients {
  std::vector<double> cosine;  // index k, k = 0 holds the mean
  std::vector<double> sine;    // sine[0] = 0
};

TimeCoefficients manufactured_modal_coefficients(const std::function<double(double)>& signal,
                                                 int max_mode, double T);

/// Evaluate a truncated Fourier series (and its time derivative) at time t.
double synthesize(const TimeCoefficients& coeffs, double omega, double t);
double synthesize_dt(const TimeCoefficients& coeffs, double omega, double t);

/// Nodal snapshot of a modal expansion at time t; all fields share one dof set.
std::vector<double> synthesize_field(const std::vector<ModalField>& modes, double omega, double t);
/// Time derivative of the modal expansion at time t.
std::vector<double> synthesize_field_dt(const std::vector<ModalField>& modes, double omega,
                                        double t);

/// Trapezoid rule over one period; exact for trigonometric polynomials of
/// degree below nt.
double time_quadrature(const std::function<double(double)>& f, double T, int nt);

}  // namespace mhfem

#include "mhfem/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace mhfem {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Antiderivative values of e^t sin(mt) and e^t cos(mt) over [0, 2 pi] for
// integer m: both reduce to rational multiples of e^{2 pi} - 1.
double exp_factor() {
  static const double value = std::exp(kTwoPi) - 1.0;
  return value;
}

double int_exp_sin(int m) { return -exp_factor() * m / (1.0 + static_cast<double>(m) * m); }
double int_exp_cos(int m) { return exp_factor() / (1.0 + static_cast<double>(m) * m); }

}  // namespace

double ExpTrigSignal::value(double t) const {
  double v = 0.0;
  for (const Term& term : terms_)
    v += term.amplitude * std::exp(t) *
         (term.is_sine ? std::sin(term.frequency * t) : std::cos(term.frequency * t));
  return v;
}

double ExpTrigSignal::derivative_value(double t) const {
  double v = 0.0;
  for (const Term& term : terms_) {
    const double m = term.frequency;
    const double e = term.amplitude * std::exp(t);
    if (term.is_sine)
      v += e * (std::sin(m * t) + m * std::cos(m * t));
    else
      v += e * (std::cos(m * t) - m * std::sin(m * t));
  }
  return v;
}

double ExpTrigSignal::second_derivative_value(double t) const {
  double v = 0.0;
  for (const Term& term : terms_) {
    const double m = term.frequency;
    const double e = term.amplitude * std::exp(t);
    if (term.is_sine)
      v += e * ((1.0 - m * m) * std::sin(m * t) + 2.0 * m * std::cos(m * t));
    else
      v += e * ((1.0 - m * m) * std::cos(m * t) - 2.0 * m * std::sin(m * t));
  }
  return v;
}

double ExpTrigSignal::cos_coeff(int k) const {
  double v = 0.0;
  for (const Term& term : terms_) {
    const int m = term.frequency;
    if (k == 0) {
      v += term.amplitude * (term.is_sine ? int_exp_sin(m) : int_exp_cos(m)) / kTwoPi;
    } else if (term.is_sine) {
      v += term.amplitude * (int_exp_sin(m + k) + int_exp_sin(m - k)) / kTwoPi;
    } else {
      v += term.amplitude * (int_exp_cos(m + k) + int_exp_cos(m - k)) / kTwoPi;
    }
  }
  return v;
}

double ExpTrigSignal::sin_coeff(int k) const {
  if (k == 0) return 0.0;
  double v = 0.0;
  for (const Term& term : terms_) {
    const int m = term.frequency;
    if (term.is_sine)
      v += term.amplitude * (int_exp_cos(m - k) - int_exp_cos(m + k)) / kTwoPi;
    else
      v += term.amplitude * (int_exp_sin(k + m) + int_exp_sin(k - m)) / kTwoPi;
  }
  return v;
}

double spatial_profile(double x, double y) { return std::sin(M_PI * x) * std::sin(M_PI * y); }

namespace {

/// Desired state with a closed-form time signal times sin(pi x) sin(pi y).
class AnalyticDesiredState final : public DesiredState {
 public:
  explicit AnalyticDesiredState(std::shared_ptr<const ExpTrigSignal> signal)
      : signal_(std::move(signal)) {}

  double cos_weight(int k) const override { return signal_->cos_coeff(k); }
  double sin_weight(int k) const override { return signal_->sin_coeff(k); }
  double profile(double x, double y) const override { return spatial_profile(x, y); }
  double profile_l2_sq() const override { return 0.25; }

 private:
  std::shared_ptr<const ExpTrigSignal> signal_;
};

/// Characteristic-function desired state of the third example:
/// chi_{[1/4,3/4]}(t) chi_{[1/2,1]^2}(x). Only odd cosine modes survive.
class CheckerDesiredState final : public DesiredState {
 public:
  double cos_weight(int k) const override {
    if (k == 0) return 0.5;
    if (k % 2 == 0) return 0.0;
    // (-sin(k pi/2) + sin(3 k pi/2)) / (k pi), evaluated branchwise so even
    // modes are exactly zero and odd ones exactly +-2/(k pi)
    return (k % 4 == 1 ? -2.0 : 2.0) / (k * M_PI);
  }
  double sin_weight(int) const override { return 0.0; }
  double profile(double x, double y) const override {
    return (x >= 0.5 && y >= 0.5) ? 1.0 : 0.0;
  }
  double profile_l2_sq() const override { return 0.25; }
  double tail_weight_sq(int N) const override {
    // sum over odd k > N of (2/(k pi))^2, via the closed-form odd series
    double partial = 0.0;
    for (int k = 1; k <= N; k += 2) partial += 1.0 / (static_cast<double>(k) * k);
    return 4.0 / (M_PI * M_PI) * (M_PI * M_PI / 8.0 - partial);
  }
};

std::shared_ptr<const ExpTrigSignal> example1_yd_signal() {
  const double p4 = std::pow(M_PI, 4);
  // (e^t/10) ((12+4 pi^4) sin^3 t - 6 sin^2 t cos t - 6 sin t cos^2 t)
  // expanded over the first and third harmonics
  return std::make_shared<ExpTrigSignal>(std::vector<ExpTrigSignal::Term>{
      {(30.0 + 12.0 * p4) / 40.0, 1, true},
      {-(18.0 + 4.0 * p4) / 40.0, 3, true},
      {-3.0 / 20.0, 1, false},
      {3.0 / 20.0, 3, false},
  });
}

std::shared_ptr<const ExpTrigSignal> example1_state_signal() {
  // e^t sin^3 t = (3/4) e^t sin t - (1/4) e^t sin 3t
  return std::make_shared<ExpTrigSignal>(std::vector<ExpTrigSignal::Term>{
      {0.75, 1, true},
      {-0.25, 3, true},
  });
}

std::shared_ptr<const ExpTrigSignal> example2_yd_signal() {
  const double p4 = std::pow(M_PI, 4);
  // (e^t/10) (-2 cos t + (10 + 4 pi^4) sin t)
  return std::make_shared<ExpTrigSignal>(std::vector<ExpTrigSignal::Term>{
      {-0.2, 1, false},
      {(10.0 + 4.0 * p4) / 10.0, 1, true},
  });
}

std::shared_ptr<const ExpTrigSignal> example2_state_signal() {
  return std::make_shared<ExpTrigSignal>(std::vector<ExpTrigSignal::Term>{{1.0, 1, true}});
}

}  // namespace

ExampleDefinition make_example(int id) {
  ExampleDefinition def;
  def.id = id;
  switch (id) {
    case 1:
      def.lambda = 0.1;
      def.T = kTwoPi;
      def.omega = 1.0;
      def.default_truncation = 8;
      def.has_exact_solution = true;
      def.yd_signal = example1_yd_signal();
      def.state_signal = example1_state_signal();
      def.desired_state = std::make_shared<AnalyticDesiredState>(def.yd_signal);
      break;
    case 2:
      def.lambda = 0.1;
      def.T = kTwoPi;
      def.omega = 1.0;
      def.default_truncation = 10;
      def.has_exact_solution = true;
      def.yd_signal = example2_yd_signal();
      def.state_signal = example2_state_signal();
      def.desired_state = std::make_shared<AnalyticDesiredState>(def.yd_signal);
      break;
    case 3:
      def.lambda = 0.01;
      def.T = 1.0;
      def.omega = kTwoPi;
      def.default_truncation = 23;
      def.has_exact_solution = false;
      def.desired_state = std::make_shared<CheckerDesiredState>();
      break;
    default:
      throw std::invalid_argument("make_example: id must be 1, 2 or 3");
  }
  return def;
}

ProblemSpec make_problem(const ExampleDefinition& def, int truncation) {
  ProblemSpec spec;
  spec.sigma = constant_coefficient(1.0);
  spec.nu = constant_coefficient(1.0);
  spec.sigma_bounds = {1.0, 1.0};
  spec.nu_bounds = {1.0, 1.0};
  spec.lambda = def.lambda;
  spec.T = def.T;
  spec.omega = def.omega;
  spec.friedrichs = 1.0 / (std::sqrt(2.0) * M_PI);
  spec.desired_state = def.desired_state;
  spec.truncation = truncation < 0 ? def.default_truncation : truncation;
  return spec;
}

double exact_state_value(const ExampleDefinition& def, Vec2 x, double t) {
  if (!def.state_signal) throw std::invalid_argument("exact state unavailable for this example");
  return def.state_signal->value(t) * spatial_profile(x.x, x.y);
}

double exact_control_value(const ExampleDefinition& def, Vec2 x, double t) {
  if (!def.state_signal) throw std::invalid_argument("exact state unavailable for this example");
  // u = sigma dy/dt - div(nu grad y) with unit coefficients and the Laplace
  // eigenfunction profile: -div grad = 2 pi^2
  const double time_part =
      def.state_signal->derivative_value(t) + 2.0 * M_PI * M_PI * def.state_signal->value(t);
  return time_part * spatial_profile(x.x, x.y);
}

double exact_adjoint_value(const ExampleDefinition& def, Vec2 x, double t) {
  return -def.lambda * exact_control_value(def, x, t);
}

double desired_state_value(const ExampleDefinition& def, Vec2 x, double t) {
  if (def.id == 3) {
    const double in_time = (t >= 0.25 && t <= 0.75) ? 1.0 : 0.0;
    return in_time * def.desired_state->profile(x.x, x.y);
  }
  return def.yd_signal->value(t) * spatial_profile(x.x, x.y);
}

ExactModalCoeffs exact_mode_coeffs(const ExampleDefinition& def, int k) {
  if (!def.has_exact_solution)
    throw std::invalid_argument("exact_mode_coeffs: no closed-form solution for this example");
  const double m = 2.0 * M_PI * M_PI;  // -Laplace eigenvalue of the profile
  const double kw = k * def.omega;
  const double g = def.desired_state->cos_weight(k);
  const double f = k == 0 ? 0.0 : def.desired_state->sin_weight(k);
  const double denom = 1.0 + def.lambda * (m * m + kw * kw);

  ExactModalCoeffs c;
  c.yc = g / denom;
  c.ys = f / denom;
  c.pc = -def.lambda * (m * c.yc + kw * c.ys);
  c.ps = k == 0 ? 0.0 : def.lambda * (kw * c.yc - m * c.ys);
  return c;
}

double exact_mode_cost(const ExampleDefinition& def, int k) {
  const ExactModalCoeffs c = exact_mode_coeffs(def, k);
  const double g = def.desired_state->cos_weight(k);
  const double f = k == 0 ? 0.0 : def.desired_state->sin_weight(k);
  const double misfit_sq = (c.yc - g) * (c.yc - g) + (c.ys - f) * (c.ys - f);
  const double control_sq = (c.pc * c.pc + c.ps * c.ps) / (def.lambda * def.lambda);
  // both fields carry the profile, ||profile||^2 = 1/4
  return 0.125 * misfit_sq + 0.125 * def.lambda * control_sq;
}

double exact_cost(const ExampleDefinition& def) {
  double total = def.T * exact_mode_cost(def, 0);
  for (int k = 1; k < 200000; ++k) {
    const double inc = 0.5 * def.T * exact_mode_cost(def, k);
    total += inc;
    if (k > 2 * def.default_truncation && inc <= 1e-14 * total) return total;
  }
  throw std::runtime_error("exact_cost: series did not converge");
}

double exact_tail_seminorm_sq(const ExampleDefinition& def, int N) {
  const double grad_profile_sq = M_PI * M_PI / 2.0;  // ||grad profile||^2
  double total = 0.0;
  for (int k = N + 1; k < 200000; ++k) {
    const ExactModalCoeffs c = exact_mode_coeffs(def, k);
    const double coeff_sq = c.yc * c.yc + c.ys * c.ys + c.pc * c.pc + c.ps * c.ps;
    const double inc =
        0.5 * def.T * (coeff_sq * grad_profile_sq + k * def.omega * coeff_sq * 0.25);
    total += inc;
    if (k > N + 16 && inc <= 1e-13 * total) return total;
  }
  throw std::runtime_error("exact_tail_seminorm_sq: series did not converge");
}

namespace {

double quadratic_form(const SparseMatrix& A, const std::vector<double>& x) {
  double s = 0.0;
  const auto ax = spmv(A, x);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ax[i];
  return s;
}

// Error norms of one component against coeff * profile, using the
// eigenfunction identity <grad profile, grad v> = 2 pi^2 <profile, v>.
void accumulate_component_error(double coeff, const std::vector<double>& v,
                                const FemMatrices& plain, const std::vector<double>& profile_load,
                                ModalErrorNorms& out) {
  double dot_pv = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) dot_pv += profile_load[i] * v[i];
  const double grad_profile_sq = M_PI * M_PI / 2.0;
  out.grad_sq += coeff * coeff * grad_profile_sq - 2.0 * coeff * 2.0 * M_PI * M_PI * dot_pv +
                 quadratic_form(plain.K_nu, v);
  out.l2_sq += coeff * coeff * 0.25 - 2.0 * coeff * dot_pv + quadratic_form(plain.M, v);
}

}  // namespace

ModalErrorNorms exact_modal_error(const ExampleDefinition& def, const Mesh& mesh,
                                  const FemMatrices& plain, const ModeSolution& mode) {
  const ExactModalCoeffs c = exact_mode_coeffs(def, mode.y.k);
  const auto profile_load = assemble_load(
      mesh, [](double x, double y) { return spatial_profile(x, y); }, degree5_rule());

  ModalErrorNorms out;
  accumulate_component_error(c.yc, mode.y.cos_coeffs, plain, profile_load, out);
  accumulate_component_error(c.pc, mode.p.cos_coeffs, plain, profile_load, out);
  if (mode.y.has_sine()) {
    accumulate_component_error(c.ys, mode.y.sin_coeffs, plain, profile_load, out);
    accumulate_component_error(c.ps, mode.p.sin_coeffs, plain, profile_load, out);
  }
  return out;
}

std::vector<double> prolongate(const Mesh& coarse, const Mesh& fine,
                               const std::vector<double>& coarse_interior) {
  if (fine.n != 2 * coarse.n)
    throw std::invalid_argument("prolongate: fine mesh must halve the coarse mesh size");
  const auto nodal = scatter_to_nodes(coarse, coarse_interior);
  const int ncp = coarse.n + 1;
  const int nfp = fine.n + 1;

  std::vector<double> fine_nodal(fine.nodes.size(), 0.0);
  for (int j = 0; j < nfp; ++j) {
    for (int i = 0; i < nfp; ++i) {
      const int idx = j * nfp + i;
      const int ic = i / 2, jc = j / 2;
      if (i % 2 == 0 && j % 2 == 0) {
        fine_nodal[idx] = nodal[jc * ncp + ic];
      } else if (i % 2 == 1 && j % 2 == 0) {
        fine_nodal[idx] = 0.5 * (nodal[jc * ncp + ic] + nodal[jc * ncp + ic + 1]);
      } else if (i % 2 == 0 && j % 2 == 1) {
        fine_nodal[idx] = 0.5 * (nodal[jc * ncp + ic] + nodal[(jc + 1) * ncp + ic]);
      } else {
        // cell center sits on the lower-left/upper-right diagonal
        fine_nodal[idx] = 0.5 * (nodal[jc * ncp + ic] + nodal[(jc + 1) * ncp + ic + 1]);
      }
    }
  }
  return restrict_to_interior(fine, fine_nodal);
}

ModalErrorNorms reference_modal_error(const Mesh& coarse, const ModeSolution& coarse_mode,
                                      const Mesh& fine, const FemMatrices& fine_plain,
                                      const ModeSolution& fine_mode) {
  auto component = [&](const std::vector<double>& coarse_v, const std::vector<double>& fine_v,
                       ModalErrorNorms& out) {
    auto diff = prolongate(coarse, fine, coarse_v);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= fine_v[i];
    out.grad_sq += quadratic_form(fine_plain.K_nu, diff);
    out.l2_sq += quadratic_form(fine_plain.M, diff);
  };

  ModalErrorNorms out;
  component(coarse_mode.y.cos_coeffs, fine_mode.y.cos_coeffs, out);
  component(coarse_mode.p.cos_coeffs, fine_mode.p.cos_coeffs, out);
  if (coarse_mode.y.has_sine()) {
    component(coarse_mode.y.sin_coeffs, fine_mode.y.sin_coeffs, out);
    component(coarse_mode.p.sin_coeffs, fine_mode.p.sin_coeffs, out);
  }
  return out;
}

}  // namespace mhfem

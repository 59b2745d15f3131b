#include "mhfem/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace mhfem {

ModalField ModalField::zero(int k, int dim) {
  ModalField f;
  f.k = k;
  f.cos_coeffs.assign(dim, 0.0);
  if (k > 0) f.sin_coeffs.assign(dim, 0.0);
  return f;
}

ModalField perp(const ModalField& f) {
  if (f.k == 0) throw std::invalid_argument("perp: undefined for the mean mode");
  ModalField out;
  out.k = f.k;
  out.cos_coeffs = f.sin_coeffs;
  out.sin_coeffs.resize(f.cos_coeffs.size());
  for (std::size_t i = 0; i < f.cos_coeffs.size(); ++i) out.sin_coeffs[i] = -f.cos_coeffs[i];
  return out;
}

ModalField scaled(const ModalField& f, double factor) {
  ModalField out = f;
  for (double& v : out.cos_coeffs) v *= factor;
  for (double& v : out.sin_coeffs) v *= factor;
  return out;
}

namespace {

double quadratic_form(const SparseMatrix& A, const std::vector<double>& x) {
  double s = 0.0;
  const auto ax = spmv(A, x);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ax[i];
  return s;
}

}  // namespace

SpectralNorms modal_l2_norms(const ModalField& f, const SparseMatrix& mass,
                             const SparseMatrix& stiffness, double T, double omega) {
  if (static_cast<int>(f.cos_coeffs.size()) != mass.rows)
    throw std::invalid_argument("modal_l2_norms: dof mismatch");
  const double weight = f.k == 0 ? T : 0.5 * T;
  SpectralNorms out;
  double l2 = quadratic_form(mass, f.cos_coeffs);
  double grad = quadratic_form(stiffness, f.cos_coeffs);
  if (f.has_sine()) {
    l2 += quadratic_form(mass, f.sin_coeffs);
    grad += quadratic_form(stiffness, f.sin_coeffs);
  }
  out.l2_sq = weight * l2;
  out.grad_sq = weight * grad;
  out.half_time_sq = f.k == 0 ? 0.0 : weight * f.k * omega * l2;
  return out;
}

double DesiredState::tail_weight_sq(int N) const {
  double total = 0.0;
  const int hard_cap = 20000000;
  for (int k = N + 1; k <= hard_cap; ++k) {
    const double c = cos_weight(k);
    const double s = sin_weight(k);
    const double inc = c * c + s * s;
    total += inc;
    if (k > N + 16 && inc <= 1e-12 * total) return total;
  }
  throw std::runtime_error("DesiredState: tail series did not converge");
}

double remainder_term(const DesiredState& yd, int N, double T) {
  if (N < 0) throw std::invalid_argument("remainder_term: N must be >= 0");
  return 0.5 * T * yd.profile_l2_sq() * yd.tail_weight_sq(N);
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirrored).
constexpr int kGaussPts = 8;
constexpr double kGaussX[kGaussPts] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGaussW[kGaussPts] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double panel_integral(const std::function<double(double)>& f, double a, double b, int panels) {
  const double len = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * len;
    const double half = 0.5 * len;
    double acc = 0.0;
    for (int i = 0; i < kGaussPts; ++i)
      acc += kGaussW[i] * (f(mid + half * kGaussX[i]) + f(mid - half * kGaussX[i]));
    total += half * acc;
  }
  return total;
}

double integrate_periodic(const std::function<double(double)>& f, double T, int oscillations) {
  int panels = std::max(8, 4 * (oscillations + 1));
  double prev = panel_integral(f, 0.0, T, panels);
  for (int round = 0; round < 12; ++round) {
    panels *= 2;
    const double cur = panel_integral(f, 0.0, T, panels);
    if (std::abs(cur - prev) <= 1e-11 * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  throw std::runtime_error("manufactured_modal_coefficients: quadrature did not converge");
}

}  // namespace

TimeCoefficients manufactured_modal_coefficients(const std::function<double(double)>& signal,
                                                 int max_mode, double T) {
  const double omega = 2.0 * M_PI / T;
  TimeCoefficients out;
  out.cosine.resize(max_mode + 1);
  out.sine.assign(max_mode + 1, 0.0);
  out.cosine[0] = integrate_periodic(signal, T, 1) / T;
  for (int k = 1; k <= max_mode; ++k) {
    out.cosine[k] =
        2.0 / T *
        integrate_periodic([&](double t) { return signal(t) * std::cos(k * omega * t); }, T, k);
    out.sine[k] =
        2.0 / T *
        integrate_periodic([&](double t) { return signal(t) * std::sin(k * omega * t); }, T, k);
  }
  return out;
}

double synthesize(const TimeCoefficients& coeffs, double omega, double t) {
  double v = coeffs.cosine.empty() ? 0.0 : coeffs.cosine[0];
  for (std::size_t k = 1; k < coeffs.cosine.size(); ++k)
    v += coeffs.cosine[k] * std::cos(k * omega * t) + coeffs.sine[k] * std::sin(k * omega * t);
  return v;
}

double synthesize_dt(const TimeCoefficients& coeffs, double omega, double t) {
  double v = 0.0;
  for (std::size_t k = 1; k < coeffs.cosine.size(); ++k)
    v += k * omega *
         (coeffs.sine[k] * std::cos(k * omega * t) - coeffs.cosine[k] * std::sin(k * omega * t));
  return v;
}

std::vector<double> synthesize_field(const std::vector<ModalField>& modes, double omega,
                                     double t) {
  if (modes.empty()) return {};
  std::vector<double> out(modes.front().cos_coeffs.size(), 0.0);
  for (const ModalField& f : modes) {
    const double c = std::cos(f.k * omega * t);
    const double s = std::sin(f.k * omega * t);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += c * f.cos_coeffs[i];
      if (f.has_sine()) out[i] += s * f.sin_coeffs[i];
    }
  }
  return out;
}

std::vector<double> synthesize_field_dt(const std::vector<ModalField>& modes, double omega,
                                        double t) {
  if (modes.empty()) return {};
  std::vector<double> out(modes.front().cos_coeffs.size(), 0.0);
  for (const ModalField& f : modes) {
    if (f.k == 0) continue;
    const double kw = f.k * omega;
    const double c = std::cos(f.k * omega * t);
    const double s = std::sin(f.k * omega * t);
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] += kw * (f.sin_coeffs[i] * c - f.cos_coeffs[i] * s);
  }
  return out;
}

double time_quadrature(const std::function<double(double)>& f, double T, int nt) {
  double total = 0.0;
  for (int i = 0; i < nt; ++i) total += f(i * T / nt);
  return total * T / nt;
}

}  // namespace mhfem

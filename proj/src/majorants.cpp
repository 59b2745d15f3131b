#include "mhfem/majorants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mhfem {

StabilityConstants StabilityConstants::from(const ProblemSpec& spec) {
  const double l = spec.lambda;
  const double sig_lo = spec.sigma_bounds.lower, sig_hi = spec.sigma_bounds.upper;
  const double nu_lo = spec.nu_bounds.lower, nu_hi = spec.nu_bounds.upper;
  const double cf = spec.friedrichs;

  StabilityConstants c;
  c.friedrichs = cf;
  c.mu1 = std::min({1.0 / std::sqrt(l), nu_lo, sig_lo}) *
          std::min(std::sqrt(l), 1.0 / std::sqrt(l)) /
          std::sqrt(1.0 + 2.0 * std::max(l, 1.0 / l));
  c.mu2 = std::max({1.0, 1.0 / l, nu_hi, sig_hi});
  c.mu1_tilde = std::min(nu_lo, sig_lo) * std::min(l, 1.0 / l) / std::sqrt(2.0);
  c.mu2_tilde = std::max({1.0, 1.0 / l, nu_hi, sig_hi}) * std::max(1.0, cf * cf + 1.0);
  c.mu1_under = std::min(nu_lo, sig_lo) / std::sqrt(2.0);
  return c;
}

namespace {

std::vector<ModalFluxPair> reconstruct_all(const Mesh& mesh, const ProblemSpec& spec,
                                           const MhSolution& sol, bool adjoint, double sign) {
  std::vector<ModalFluxPair> out(sol.modes.size());
  for (std::size_t k = 0; k < sol.modes.size(); ++k) {
    const ModalField& f = adjoint ? sol.modes[k].p : sol.modes[k].y;
    out[k].cosine =
        scaled(reconstruct_rt0(mesh, scatter_to_nodes(mesh, f.cos_coeffs), spec.nu), sign);
    if (f.has_sine())
      out[k].sine =
          scaled(reconstruct_rt0(mesh, scatter_to_nodes(mesh, f.sin_coeffs), spec.nu), sign);
  }
  return out;
}

struct ModeFields {
  std::vector<double> eta_c, eta_s, zeta_c, zeta_s;
  std::vector<double> div_tau_c, div_tau_s, div_rho_c, div_rho_s;
  bool has_sine = false;
};

ModeFields gather_mode(const Mesh& mesh, const ModeSolution& mode, const ModalFluxPair& tau,
                       const ModalFluxPair& rho) {
  ModeFields f;
  f.has_sine = mode.y.has_sine();
  f.eta_c = scatter_to_nodes(mesh, mode.y.cos_coeffs);
  f.zeta_c = scatter_to_nodes(mesh, mode.p.cos_coeffs);
  f.div_tau_c = rt0_divergence(tau.cosine);
  f.div_rho_c = rt0_divergence(rho.cosine);
  if (f.has_sine) {
    f.eta_s = scatter_to_nodes(mesh, mode.y.sin_coeffs);
    f.zeta_s = scatter_to_nodes(mesh, mode.p.sin_coeffs);
    f.div_tau_s = rt0_divergence(tau.sine);
    f.div_rho_s = rt0_divergence(rho.sine);
  }
  return f;
}

}  // namespace

std::vector<ModalFluxPair> state_fluxes(const Mesh& mesh, const ProblemSpec& spec,
                                        const MhSolution& sol) {
  return reconstruct_all(mesh, spec, sol, false, 1.0);
}

std::vector<ModalFluxPair> adjoint_fluxes(const Mesh& mesh, const ProblemSpec& spec,
                                          const MhSolution& sol) {
  return reconstruct_all(mesh, spec, sol, true, -1.0);
}

ModalResiduals modal_residuals(const Mesh& mesh, const ProblemSpec& spec,
                               const MhSolution& approx, const std::vector<ModalFluxPair>& tau,
                               const std::vector<ModalFluxPair>& rho) {
  if (tau.size() != approx.modes.size() || rho.size() != approx.modes.size())
    throw std::invalid_argument("modal_residuals: mode count mismatch");
  const DesiredState& yd = *spec.desired_state;
  const double inv_lambda = 1.0 / spec.lambda;
  const TriQuadRule& rule = degree5_rule();
  const double area = mesh.tri_area();

  ModalResiduals out;
  const std::size_t n_modes = approx.modes.size();
  out.r1_sq.assign(n_modes, 0.0);
  out.r2_sq.assign(n_modes, 0.0);
  out.r3_sq.assign(n_modes, 0.0);
  out.r4_sq.assign(n_modes, 0.0);

  for (std::size_t k = 0; k < n_modes; ++k) {
    const ModeFields f = gather_mode(mesh, approx.modes[k], tau[k], rho[k]);
    const double kw = static_cast<double>(k) * spec.omega;
    const double wc = yd.cos_weight(static_cast<int>(k));
    const double ws = f.has_sine ? yd.sin_weight(static_cast<int>(k)) : 0.0;

    double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const auto& tri = mesh.triangles[t];
      const Vec2 p0 = mesh.nodes[tri[0]];
      const Vec2 p1 = mesh.nodes[tri[1]];
      const Vec2 p2 = mesh.nodes[tri[2]];
      const Vec2 grad_eta_c = p1_gradient(mesh, f.eta_c, t);
      const Vec2 grad_zeta_c = p1_gradient(mesh, f.zeta_c, t);
      Vec2 grad_eta_s{}, grad_zeta_s{};
      if (f.has_sine) {
        grad_eta_s = p1_gradient(mesh, f.eta_s, t);
        grad_zeta_s = p1_gradient(mesh, f.zeta_s, t);
      }

      for (const auto& q : rule.points) {
        const double x = q.l0 * p0.x + q.l1 * p1.x + q.l2 * p2.x;
        const double y = q.l0 * p0.y + q.l1 * p1.y + q.l2 * p2.y;
        const double w = q.w * area;
        const double sig = spec.sigma(x, y);
        const double vis = spec.nu(x, y);
        const double prof = yd.profile(x, y);

        auto lerp = [&](const std::vector<double>& nodal) {
          return q.l0 * nodal[tri[0]] + q.l1 * nodal[tri[1]] + q.l2 * nodal[tri[2]];
        };

        const double eta_c = lerp(f.eta_c);
        const double zeta_c = lerp(f.zeta_c);
        const Vec2 tau_c = rt0_value(tau[k].cosine, t, {x, y});
        const Vec2 rho_c = rt0_value(rho[k].cosine, t, {x, y});

        if (!f.has_sine) {
          const double r1c = inv_lambda * zeta_c - f.div_tau_c[t];
          const double r3c = eta_c - f.div_rho_c[t] - wc * prof;
          const Vec2 r2c{tau_c.x - vis * grad_eta_c.x, tau_c.y - vis * grad_eta_c.y};
          const Vec2 r4c{rho_c.x + vis * grad_zeta_c.x, rho_c.y + vis * grad_zeta_c.y};
          r1 += w * r1c * r1c;
          r2 += w * dot(r2c, r2c);
          r3 += w * r3c * r3c;
          r4 += w * dot(r4c, r4c);
          continue;
        }

        const double eta_s = lerp(f.eta_s);
        const double zeta_s = lerp(f.zeta_s);
        const Vec2 tau_s = rt0_value(tau[k].sine, t, {x, y});
        const Vec2 rho_s = rt0_value(rho[k].sine, t, {x, y});

        const double r1c = kw * sig * eta_s + inv_lambda * zeta_c - f.div_tau_c[t];
        const double r1s = -kw * sig * eta_c + inv_lambda * zeta_s - f.div_tau_s[t];
        const double r3c = kw * sig * zeta_s + eta_c - f.div_rho_c[t] - wc * prof;
        const double r3s = -kw * sig * zeta_c + eta_s - f.div_rho_s[t] - ws * prof;
        const Vec2 r2c{tau_c.x - vis * grad_eta_c.x, tau_c.y - vis * grad_eta_c.y};
        const Vec2 r2s{tau_s.x - vis * grad_eta_s.x, tau_s.y - vis * grad_eta_s.y};
        const Vec2 r4c{rho_c.x + vis * grad_zeta_c.x, rho_c.y + vis * grad_zeta_c.y};
        const Vec2 r4s{rho_s.x + vis * grad_zeta_s.x, rho_s.y + vis * grad_zeta_s.y};

        r1 += w * (r1c * r1c + r1s * r1s);
        r2 += w * (dot(r2c, r2c) + dot(r2s, r2s));
        r3 += w * (r3c * r3c + r3s * r3s);
        r4 += w * (dot(r4c, r4c) + dot(r4s, r4s));
      }
    }
    out.r1_sq[k] = r1;
    out.r2_sq[k] = r2;
    out.r3_sq[k] = r3;
    out.r4_sq[k] = r4;
  }
  return out;
}

SeminormMajorant majorant_seminorm(const ModalResiduals& res, const StabilityConstants& consts,
                                   double remainder, double T) {
  SeminormMajorant out;
  out.per_mode.resize(res.n_modes());
  const double cf = consts.friedrichs;
  const double sqrt2 = std::sqrt(2.0);

  for (int k = 0; k < res.n_modes(); ++k) {
    out.per_mode[k] = sqrt2 * (cf * (std::sqrt(res.r1_sq[k]) + std::sqrt(res.r3_sq[k])) +
                               std::sqrt(res.r2_sq[k]) + std::sqrt(res.r4_sq[k]));
    const double weight = k == 0 ? T : 0.5 * T;
    out.group_sums_sq[0] += weight * res.r1_sq[k];
    out.group_sums_sq[1] += weight * res.r2_sq[k];
    out.group_sums_sq[2] += weight * res.r3_sq[k];
    out.group_sums_sq[3] += weight * res.r4_sq[k];
  }

  const double bracket = cf * std::sqrt(out.group_sums_sq[0]) + std::sqrt(out.group_sums_sq[1]) +
                         cf * std::sqrt(out.group_sums_sq[2] + remainder) +
                         std::sqrt(out.group_sums_sq[3]);
  out.total = sqrt2 * bracket;
  out.total_theorem = bracket / consts.mu1_tilde;
  return out;
}

double majorant_full_norm(const ModalResiduals& res, const StabilityConstants& consts,
                          double remainder, double T) {
  double sum = remainder;
  for (int k = 0; k < res.n_modes(); ++k) {
    const double weight = k == 0 ? T : 0.5 * T;
    sum += weight * (res.r1_sq[k] + res.r2_sq[k] + res.r3_sq[k] + res.r4_sq[k]);
  }
  return std::sqrt(sum) / consts.mu1;
}

YoungOpt optimize_young(double misfit_half_sq, double x_term, double y_term) {
  if (misfit_half_sq < 0.0 || x_term < 0.0 || y_term < 0.0)
    throw std::invalid_argument("optimize_young: negative input");
  const double inf = std::numeric_limits<double>::infinity();

  YoungOpt opt;
  double s;  // inf over beta of (1+beta)(X + Y/beta)
  if (x_term > 0.0 && y_term > 0.0) {
    opt.beta = std::sqrt(y_term / x_term);
    const double sx = std::sqrt(x_term), sy = std::sqrt(y_term);
    s = (sx + sy) * (sx + sy);
  } else if (y_term > 0.0) {  // X = 0: beta -> infinity
    opt.beta = inf;
    s = y_term;
  } else {  // Y = 0: beta -> 0
    opt.beta = 0.0;
    s = x_term;
  }

  if (misfit_half_sq > 0.0 && s > 0.0) {
    opt.alpha = std::sqrt(s / misfit_half_sq);
    const double sa = std::sqrt(misfit_half_sq), ss = std::sqrt(s);
    opt.value = (sa + ss) * (sa + ss);
  } else if (s > 0.0) {  // exact data: alpha -> infinity
    opt.alpha = inf;
    opt.value = s;
  } else {  // exact equation residuals: alpha -> 0
    opt.alpha = 0.0;
    opt.value = misfit_half_sq;
  }
  return opt;
}

CostMajorant cost_majorant(const Mesh& mesh, const ProblemSpec& spec, const MhSolution& sol,
                           const std::vector<ModalFluxPair>& tau,
                           const StabilityConstants& consts) {
  if (tau.size() != sol.modes.size())
    throw std::invalid_argument("cost_majorant: mode count mismatch");
  const DesiredState& yd = *spec.desired_state;
  const double cf = consts.friedrichs;
  const double mu_sq = consts.mu1_under * consts.mu1_under;
  const double x_coeff = cf * cf / (2.0 * mu_sq);
  const double y_coeff = cf * cf * cf * cf / (2.0 * mu_sq);
  const TriQuadRule& rule = degree5_rule();
  const double area = mesh.tri_area();

  CostMajorant out;
  const std::size_t n_modes = sol.modes.size();
  out.per_mode.resize(n_modes);
  out.alpha.resize(n_modes);
  out.beta.resize(n_modes);

  for (std::size_t k = 0; k < n_modes; ++k) {
    const ModeSolution& mode = sol.modes[k];
    const bool has_sine = mode.y.has_sine();
    const double kw = static_cast<double>(k) * spec.omega;

    const auto y_c = scatter_to_nodes(mesh, mode.y.cos_coeffs);
    const auto u_c = scatter_to_nodes(mesh, mode.u.cos_coeffs);
    std::vector<double> y_s, u_s;
    if (has_sine) {
      y_s = scatter_to_nodes(mesh, mode.y.sin_coeffs);
      u_s = scatter_to_nodes(mesh, mode.u.sin_coeffs);
    }
    const auto div_tau_c = rt0_divergence(tau[k].cosine);
    std::vector<double> div_tau_s;
    if (has_sine) div_tau_s = rt0_divergence(tau[k].sine);

    double r1 = 0.0, r2 = 0.0, u_sq = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
      const auto& tri = mesh.triangles[t];
      const Vec2 p0 = mesh.nodes[tri[0]];
      const Vec2 p1 = mesh.nodes[tri[1]];
      const Vec2 p2 = mesh.nodes[tri[2]];
      const Vec2 grad_y_c = p1_gradient(mesh, y_c, t);
      Vec2 grad_y_s{};
      if (has_sine) grad_y_s = p1_gradient(mesh, y_s, t);

      for (const auto& q : rule.points) {
        const double x = q.l0 * p0.x + q.l1 * p1.x + q.l2 * p2.x;
        const double yy = q.l0 * p0.y + q.l1 * p1.y + q.l2 * p2.y;
        const double w = q.w * area;
        const double sig = spec.sigma(x, yy);
        const double vis = spec.nu(x, yy);

        auto lerp = [&](const std::vector<double>& nodal) {
          return q.l0 * nodal[tri[0]] + q.l1 * nodal[tri[1]] + q.l2 * nodal[tri[2]];
        };

        const double yc = lerp(y_c);
        const double uc = lerp(u_c);
        const Vec2 tau_c = rt0_value(tau[k].cosine, t, {x, yy});
        const Vec2 r2c{tau_c.x - vis * grad_y_c.x, tau_c.y - vis * grad_y_c.y};

        if (!has_sine) {
          const double r1c = div_tau_c[t] + uc;
          r1 += w * r1c * r1c;
          r2 += w * dot(r2c, r2c);
          u_sq += w * uc * uc;
          continue;
        }

        const double ys = lerp(y_s);
        const double us = lerp(u_s);
        const Vec2 tau_s = rt0_value(tau[k].sine, t, {x, yy});
        const double r1c = -kw * sig * ys + div_tau_c[t] + uc;
        const double r1s = kw * sig * yc + div_tau_s[t] + us;
        const Vec2 r2s{tau_s.x - vis * grad_y_s.x, tau_s.y - vis * grad_y_s.y};
        r1 += w * (r1c * r1c + r1s * r1s);
        r2 += w * (dot(r2c, r2c) + dot(r2s, r2s));
        u_sq += w * (uc * uc + us * us);
      }
    }

    const double misfit = modal_misfit_sq(mesh, mode.y, yd);
    const YoungOpt opt = optimize_young(0.5 * misfit, x_coeff * r2, y_coeff * r1);
    out.alpha[k] = opt.alpha;
    out.beta[k] = opt.beta;
    out.per_mode[k] = opt.value + 0.5 * spec.lambda * u_sq;
  }

  out.remainder = remainder_term(yd, sol.truncation(), spec.T);
  // the tail Young parameter is sent to its zero limit
  out.total = spec.T * out.per_mode[0] + 0.5 * out.remainder;
  for (std::size_t k = 1; k < n_modes; ++k) out.total += 0.5 * spec.T * out.per_mode[k];
  return out;
}

double efficiency_index(double majorant, double reference) {
  if (reference == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return majorant / reference;
}

}  // namespace mhfem

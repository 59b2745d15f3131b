// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. The two long benchmark runs
// (example 1 on the 256 grid, example 3 on the 256/512 pair) fit the budget
// and run by default; MHFEM_ACCEPT_SKIP_LARGE=1 and
// MHFEM_ACCEPT_SKIP_EX3_FULL=1 skip them on constrained machines.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "mhfem/majorants.hpp"
#include "mhfem/problems.hpp"
#include "mhfem/report.hpp"

using namespace mhfem;

namespace {

int g_workers = 4;

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& msg) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += msg;
    }
  }
  void note(const std::string& msg) {
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

bool within(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

struct Run {
  ExampleDefinition def;
  ProblemSpec spec;
  Mesh mesh;
  Discretization disc;
  MhSolution sol;
  std::vector<ModalFluxPair> tau, rho;
  ModalResiduals res;
  StabilityConstants consts;
  double remainder = 0.0;
  SeminormMajorant semi;
  CostMajorant cost;
};

Run solve_and_estimate(int example, int n, int truncation, double tol = 1e-10) {
  Run run;
  run.def = make_example(example);
  run.spec = make_problem(run.def, truncation);
  run.mesh = build_uniform_mesh(n);
  run.disc = discretize(run.spec, run.mesh);
  run.disc.mesh = &run.mesh;
  run.sol = solve_all_modes(run.spec, run.disc, tol, 2000, g_workers);
  run.tau = state_fluxes(run.mesh, run.spec, run.sol);
  run.rho = adjoint_fluxes(run.mesh, run.spec, run.sol);
  run.res = modal_residuals(run.mesh, run.spec, run.sol, run.tau, run.rho);
  run.consts = StabilityConstants::from(run.spec);
  run.remainder = remainder_term(*run.spec.desired_state, truncation, run.spec.T);
  run.semi = majorant_seminorm(run.res, run.consts, run.remainder, run.spec.T);
  run.cost = cost_majorant(run.mesh, run.spec, run.sol, run.tau, run.consts);
  return run;
}

// restrict a solved run to a smaller truncation (modes are independent)
Run sliced(const Run& full, int truncation) {
  Run run = full;
  run.spec.truncation = truncation;
  run.sol.modes.resize(truncation + 1);
  run.tau.resize(truncation + 1);
  run.rho.resize(truncation + 1);
  run.res.r1_sq.resize(truncation + 1);
  run.res.r2_sq.resize(truncation + 1);
  run.res.r3_sq.resize(truncation + 1);
  run.res.r4_sq.resize(truncation + 1);
  run.remainder = remainder_term(*run.spec.desired_state, truncation, run.spec.T);
  run.semi = majorant_seminorm(run.res, run.consts, run.remainder, run.spec.T);
  run.cost = cost_majorant(run.mesh, run.spec, run.sol, run.tau, run.consts);
  return run;
}

double mode_error_semi(const Run& run, int k) {
  const auto err = exact_modal_error(run.def, run.mesh, run.disc.mats, run.sol.modes[k]);
  return std::sqrt(err.grad_sq);
}

double overall_error_semi(const Run& run) {
  double total = 0.0;
  for (std::size_t k = 0; k < run.sol.modes.size(); ++k) {
    const auto err = exact_modal_error(run.def, run.mesh, run.disc.mats, run.sol.modes[k]);
    total += (k == 0 ? run.spec.T : 0.5 * run.spec.T) * err.grad_sq;
  }
  return std::sqrt(total);
}

double overall_ieff_m(const Run& run) { return run.semi.total / overall_error_semi(run); }

// full |.|_{1,1/2} error including the truncated exact-solution tail
double full_error_seminorm(const Run& run) {
  double total = exact_tail_seminorm_sq(run.def, run.spec.truncation);
  for (std::size_t k = 0; k < run.sol.modes.size(); ++k) {
    const auto err = exact_modal_error(run.def, run.mesh, run.disc.mats, run.sol.modes[k]);
    total += (k == 0 ? run.spec.T : 0.5 * run.spec.T) *
             (err.grad_sq + k * run.spec.omega * err.l2_sq);
  }
  return std::sqrt(total);
}

Check criterion1(const Run& r16, const Run& r32, const Run& r64, double shared_seconds) {
  Check c;
  c.require(shared_seconds < 30.0, "runtime " + num(shared_seconds) + "s");
  const Run* runs[3] = {&r16, &r32, &r64};
  const double m_ref[3] = {1.75e1, 8.20e0, 3.92e0};
  const double i_ref[3] = {2.50, 2.20, 2.05};
  for (int i = 0; i < 3; ++i) {
    const Run& run = *runs[i];
    const double m = run.semi.per_mode[0];
    const double ieff = m / mode_error_semi(run, 0);
    const double j = run.cost.per_mode[0];
    const double jeff = j / exact_mode_cost(run.def, 0);
    c.require(within(m, m_ref[i], 0.25),
              "M0(n=" + std::to_string(run.mesh.n) + ")=" + num(m) + " vs " + num(m_ref[i]) +
                  "+-25% [see decisions ledger]");
    c.require(std::abs(ieff - i_ref[i]) <= 0.3,
              "Ieff_M0(n=" + std::to_string(run.mesh.n) + ")=" + num(ieff) + " vs " +
                  num(i_ref[i]) + "+-0.3 [see decisions ledger]");
    c.require(within(j, 1.27e5, 0.05), "J0(n=" + std::to_string(run.mesh.n) + ")=" + num(j));
    c.require(jeff <= 1.05, "Ieff_J0(n=" + std::to_string(run.mesh.n) + ")=" + num(jeff));
  }
  return c;
}

Check criterion2(const Run& r16, const Run& r32, const Run& r64) {
  Check c;
  const Run* runs[3] = {&r16, &r32, &r64};
  const double m_ref[3] = {3.40e1, 1.59e1, 7.63e0};
  const double i_ref[3] = {2.50, 2.20, 2.05};
  for (int i = 0; i < 3; ++i) {
    const Run& run = *runs[i];
    const double m = run.semi.per_mode[1];
    const double ieff = m / mode_error_semi(run, 1);
    const double j = run.cost.per_mode[1];
    c.require(within(m, m_ref[i], 0.25),
              "M1(n=" + std::to_string(run.mesh.n) + ")=" + num(m) + " vs " + num(m_ref[i]) +
                  "+-25% [see decisions ledger]");
    c.require(std::abs(ieff - i_ref[i]) <= 0.3,
              "Ieff_M1(n=" + std::to_string(run.mesh.n) + ")=" + num(ieff) + " vs " +
                  num(i_ref[i]) + "+-0.3 [see decisions ledger]");
    c.require(within(j, 4.80e5, 0.05), "J1(n=" + std::to_string(run.mesh.n) + ")=" + num(j));
  }
  return c;
}

Check criterion3() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto e1 = make_example(1);
  auto e2 = make_example(2);
  const struct {
    const DesiredState* yd;
    double T;
    int N;
    double expected;
  } cases[] = {
      {e1.desired_state.get(), e1.T, 6, 640.25},   {e1.desired_state.get(), e1.T, 8, 106.07},
      {e2.desired_state.get(), e2.T, 6, 44094.84}, {e2.desired_state.get(), e2.T, 8, 19869.30},
      {e2.desired_state.get(), e2.T, 10, 10597.20},
  };
  for (const auto& kase : cases) {
    const double value = remainder_term(*kase.yd, kase.N, kase.T);
    c.require(within(value, kase.expected, 0.005),
              "E_" + std::to_string(kase.N) + "=" + num(value) + " vs " + num(kase.expected));
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(sec < 1.0, "runtime " + num(sec) + "s");
  return c;
}

Check criterion4(const Run& r64_n8) {
  Check c;
  const Run r64_n6 = sliced(r64_n8, 6);
  const double i6 = overall_ieff_m(r64_n6);
  const double i8 = overall_ieff_m(r64_n8);
  c.require(i8 < i6, "overall Ieff_M N=8 (" + num(i8) + ") !< N=6 (" + num(i6) + ")");
  c.require(within(r64_n6.cost.total, 3.17e6, 0.05), "J(N=6)=" + num(r64_n6.cost.total));
  c.require(within(r64_n8.cost.total, 3.17e6, 0.05), "J(N=8)=" + num(r64_n8.cost.total));
  c.note("Ieff_M " + num(i6) + " -> " + num(i8) + ", J " + num(r64_n8.cost.total));

  if (const char* env = std::getenv("MHFEM_ACCEPT_SKIP_LARGE"); env && std::strcmp(env, "1") == 0) {
    c.note("n=256 check skipped (MHFEM_ACCEPT_SKIP_LARGE=1)");
  } else {
    const auto start = std::chrono::steady_clock::now();
    const Run large = solve_and_estimate(1, 256, 8);
    c.require(within(large.semi.total, 6.13, 0.30),
              "overall M(n=256)=" + num(large.semi.total) +
                  " vs 6.13+-30% [see decisions ledger]");
    // the guarantees must also hold where the bound margins are thinnest
    c.require(large.semi.total_theorem > full_error_seminorm(large),
              "n=256 majorant below the true error");
    c.require(large.cost.total > exact_cost(large.def), "n=256 J+ below the exact cost");
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(sec < 300.0, "n=256 runtime " + num(sec) + "s");
  }
  return c;
}

Check criterion5(const Run& ex2_n10) {
  Check c;
  const Run n6 = sliced(ex2_n10, 6);
  const Run n8 = sliced(ex2_n10, 8);
  const double i6 = overall_ieff_m(n6);
  const double i8 = overall_ieff_m(n8);
  const double i10 = overall_ieff_m(ex2_n10);
  c.require(within(ex2_n10.cost.total, 7.06e6, 0.05), "J(N=10)=" + num(ex2_n10.cost.total));
  c.require(i6 > i8 && i8 > i10,
            "Ieff_M not monotone: " + num(i6) + ", " + num(i8) + ", " + num(i10));
  c.note("Ieff_M " + num(i6) + " -> " + num(i8) + " -> " + num(i10));
  return c;
}

Check criterion6() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto def = make_example(3);

  // odd-mode-only structure is exact: even modes carry exactly zero data and
  // exactly zero solutions
  {
    auto spec = make_problem(def, 4);
    const Mesh mesh = build_uniform_mesh(32);
    auto disc = discretize(spec, mesh);
    auto sol = solve_all_modes(spec, disc, 1e-10, 2000, g_workers);
    for (int k = 2; k <= 4; k += 2) {
      double norm = 0.0;
      for (double v : sol.modes[k].y.cos_coeffs) norm += std::abs(v);
      for (double v : sol.modes[k].p.cos_coeffs) norm += std::abs(v);
      c.require(norm == 0.0, "even mode " + std::to_string(k) + " not exactly zero");
      c.require(sol.modes[k].iterations == 0, "even mode solved iteratively");
    }
  }

  const bool full = [] {
    const char* env = std::getenv("MHFEM_ACCEPT_SKIP_EX3_FULL");
    return !(env && std::strcmp(env, "1") == 0);
  }();
  const int n = full ? 256 : 128;

  auto spec = make_problem(def, 3);
  const Mesh coarse = build_uniform_mesh(n);
  const Mesh fine = build_uniform_mesh(2 * n);
  auto disc = discretize(spec, coarse);
  auto fine_disc = discretize(spec, fine);
  auto sol = solve_all_modes(spec, disc, 1e-10, 2000, g_workers);
  auto fine_sol = solve_all_modes(spec, fine_disc, 1e-10, 2000, g_workers);
  auto tau = state_fluxes(coarse, spec, sol);
  auto consts = StabilityConstants::from(spec);
  auto cost = cost_majorant(coarse, spec, sol, tau, consts);
  auto fine_cost = evaluate_cost(spec, fine_disc, fine_sol);

  for (int k : {0, 1, 3}) {
    const double ieff = cost.per_mode[k] / fine_cost.per_mode[k];
    c.require(ieff <= 1.5, "Ieff_J" + std::to_string(k) + "=" + num(ieff) + " > 1.5");
    c.note("Ieff_J" + std::to_string(k) + "=" + num(ieff));
  }

  if (full) {
    // Table magnitudes carry an unprinted amplitude; the scale-free per-mode
    // ratios are checked instead (see decisions ledger)
    const double r1 = cost.per_mode[1] / cost.per_mode[0];
    const double r3 = cost.per_mode[3] / cost.per_mode[0];
    c.require(within(r1, 1.31e5 / 8.20e4, 0.25), "J1/J0=" + num(r1) + " vs 1.60+-25%");
    c.require(within(r3, 1.35e4 / 8.20e4, 0.25), "J3/J0=" + num(r3) + " vs 0.165+-25%");
    c.note("J1/J0=" + num(r1) + ", J3/J0=" + num(r3) + " at 256/512");
    const double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(sec < 900.0, "full runtime " + num(sec) + "s");
  } else {
    c.note("full 256/512 run skipped (MHFEM_ACCEPT_SKIP_EX3_FULL=1)");
  }
  return c;
}

Check criterion7(const std::vector<const Run*>& runs) {
  Check c;
  int checked = 0;
  for (const Run* run : runs) {
    const double err = full_error_seminorm(*run);
    const double exact = exact_cost(run->def);
    c.require(run->semi.total_theorem > err,
              "majorant " + num(run->semi.total_theorem) + " !>= error " + num(err));
    c.require(run->cost.total > exact,
              "J+ " + num(run->cost.total) + " !>= J " + num(exact));
    ++checked;
  }
  c.note(std::to_string(2 * checked) + " bound checks, zero violations required");
  return c;
}

Check criterion8() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto def = make_example(1);
  auto spec = make_problem(def, 2);
  const Mesh mesh = build_uniform_mesh(4);
  auto disc = discretize(spec, mesh);
  for (int k = 0; k <= 2; ++k) {
    auto sys = build_mode_system(spec, disc, k);
    Preconditioner pre(disc.mats, k, spec.omega, spec.lambda);
    auto iter = minres_solve(sys, pre, 1e-12, 1000);
    auto direct = dense_solve(sys);
    double num_sq = 0.0, den_sq = 0.0;
    for (int i = 0; i < sys.dim(); ++i) {
      num_sq += (iter.x[i] - direct[i]) * (iter.x[i] - direct[i]);
      den_sq += direct[i] * direct[i];
    }
    c.require(iter.converged, "mode " + std::to_string(k) + " did not converge");
    c.require(std::sqrt(num_sq / den_sq) <= 1e-8,
              "mode " + std::to_string(k) + " disagrees with the dense oracle");
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(sec < 1.0, "runtime " + num(sec) + "s");
  return c;
}

Check criterion9(const Run& r32) {
  Check c;
  const Mesh& mesh = r32.mesh;
  const FemMatrices& mats = r32.disc.mats;

  auto quad = [](const SparseMatrix& A, const std::vector<double>& x) {
    const auto ax = spmv(A, x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ax[i];
    return s;
  };

  // Parseval on a synthetic multi-mode field
  {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<ModalField> modes;
    for (int k = 0; k <= 2; ++k) {
      auto f = ModalField::zero(k, mats.dim);
      for (double& v : f.cos_coeffs) v = dist(gen);
      for (double& v : f.sin_coeffs) v = dist(gen);
      modes.push_back(f);
    }
    double modal = 0.0;
    for (const auto& f : modes)
      modal += modal_l2_norms(f, mats.M, mats.K_nu, r32.spec.T, r32.spec.omega).l2_sq;
    const double tq = time_quadrature(
        [&](double t) {
          auto v = synthesize_field(modes, r32.spec.omega, t);
          return quad(mats.M, v);
        },
        r32.spec.T, 512);
    c.require(std::abs(tq - modal) <= 1e-8 * modal, "Parseval violated");
  }

  // discrete Friedrichs with C_F = 1/(sqrt(2) pi) on every computed field
  {
    const double cf_sq = 1.0 / (2.0 * M_PI * M_PI);
    for (const auto& mode : r32.sol.modes) {
      for (const auto* fld : {&mode.y, &mode.p}) {
        c.require(quad(mats.M, fld->cos_coeffs) <=
                      cf_sq * quad(mats.K_nu, fld->cos_coeffs) * (1.0 + 1e-12),
                  "Friedrichs violated (cos)");
        if (fld->has_sine())
          c.require(quad(mats.M, fld->sin_coeffs) <=
                        cf_sq * quad(mats.K_nu, fld->sin_coeffs) * (1.0 + 1e-12),
                    "Friedrichs violated (sin)");
      }
    }
  }

  // orthogonality relations: sigma- and nu-weighted rotations annihilate
  {
    for (std::size_t k = 1; k < r32.sol.modes.size(); ++k) {
      const auto& y = r32.sol.modes[k].y;
      const auto yp = perp(y);
      auto bilinear = [&](const SparseMatrix& A) {
        const auto ac = spmv(A, y.cos_coeffs);
        const auto as = spmv(A, y.sin_coeffs);
        double cross = 0.0, scale = 0.0;
        for (int i = 0; i < mats.dim; ++i) {
          cross += yp.cos_coeffs[i] * ac[i] + yp.sin_coeffs[i] * as[i];
          scale += y.cos_coeffs[i] * ac[i] + y.sin_coeffs[i] * as[i];
        }
        return std::abs(cross) / scale;
      };
      c.require(bilinear(mats.M_sigma) <= 1e-12, "sigma orthogonality violated");
      c.require(bilinear(mats.K_nu) <= 1e-12, "nu orthogonality violated");
    }
  }

  // perp involution
  {
    const auto& y = r32.sol.modes[1].y;
    const auto pp = perp(perp(y));
    bool exact = true;
    for (std::size_t i = 0; i < y.cos_coeffs.size(); ++i)
      exact = exact && pp.cos_coeffs[i] == -y.cos_coeffs[i] &&
              pp.sin_coeffs[i] == -y.sin_coeffs[i];
    c.require(exact, "perp involution not exact");
  }

  // Young closed form against the literal 200x200 grid search
  {
    auto grid_min = [](double A, double X, double Y) {
      double best = 1e300;
      for (int i = 1; i <= 200; ++i)
        for (int j = 1; j <= 200; ++j) {
          const double a = 0.05 * i, b = 0.05 * j;
          best = std::min(best, (1.0 + a) * A + (1.0 + a) * (1.0 + b) / a * (X + Y / b));
        }
      return best;
    };
    auto o = optimize_young(1.0, 1.0, 1.0);  // optimum (2, 1) lies on the grid
    c.require(std::abs(o.value - grid_min(1.0, 1.0, 1.0)) <= 1e-6 * o.value,
              "Young closed form vs grid search");
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> dist(0.2, 2.0);
    for (int t = 0; t < 20; ++t) {
      const double A = dist(gen), X = dist(gen), Y = dist(gen);
      c.require(optimize_young(A, X, Y).value <= grid_min(A, X, Y) * (1.0 + 1e-12),
                "Young closed form above grid search");
    }
  }

  // RT0 H(div) conformity on a computed flux
  {
    const Rt0Field& f = r32.tau[1].cosine;
    double worst = 0.0;
    for (int e = 0; e < mesh.num_edges(); ++e) {
      const Edge& ed = mesh.edges[e];
      if (ed.tri[1] < 0) continue;
      const Vec2 mid = mesh.edge_midpoint(e);
      const Vec2 nrm = mesh.edge_normal(e);
      worst = std::max(worst, std::abs(dot(rt0_value(f, ed.tri[0], mid), nrm) -
                                       dot(rt0_value(f, ed.tri[1], mid), nrm)));
    }
    c.require(worst <= 1e-13, "H(div) normal jump " + num(worst));
  }

  // quadratic alpha-beta-gamma form collapses to the plain sum
  {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> dist(0.05, 2.0);
    const double cf = r32.consts.friedrichs;
    for (int trial = 0; trial < 3; ++trial) {
      const double r1 = dist(gen), r2 = dist(gen), r3 = dist(gen), r4 = dist(gen);
      auto form = [&](double a, double b, double g) {
        return cf * cf * (1.0 + a) * (1.0 + b) * r1 * r1 +
               (1.0 + a) * (1.0 + b) / b * r2 * r2 +
               cf * cf * (1.0 + a) * (1.0 + g) / a * r3 * r3 +
               (1.0 + a) * (1.0 + g) / (a * g) * r4 * r4;
      };
      const double plain = std::pow(cf * r1 + r2 + cf * r3 + r4, 2);
      double a = 1.0, b = 1.0, g = 1.0, best = form(a, b, g), width = 4.0;
      for (int round = 0; round < 60; ++round) {
        double ba = a, bb = b, bg = g;
        for (int i = -6; i <= 6; ++i)
          for (int j = -6; j <= 6; ++j)
            for (int l = -6; l <= 6; ++l) {
              const double ca = a * std::pow(2.0, width * i / 6.0);
              const double cb = b * std::pow(2.0, width * j / 6.0);
              const double cg = g * std::pow(2.0, width * l / 6.0);
              if (const double val = form(ca, cb, cg); val < best) {
                best = val;
                ba = ca;
                bb = cb;
                bg = cg;
              }
            }
        a = ba;
        b = bb;
        g = bg;
        width *= 0.7;
      }
      c.require(std::abs(best - plain) <= 1e-9 * plain, "quadratic-form equivalence");
    }
  }
  return c;
}

Check criterion10() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto def = make_example(1);
  int lo = 1 << 20, hi = 0;
  std::string where_lo, where_hi;
  // seeded random right-hand sides probe the preconditioned operator itself;
  // the benchmark loads are nearly a single spatial eigenvector and collapse
  // the Krylov space
  for (int n : {16, 32, 64, 128}) {
    const Mesh mesh = build_uniform_mesh(n);
    for (double lambda : {0.01, 0.1, 1.0}) {
      auto spec = make_problem(def, 8);
      spec.lambda = lambda;
      auto disc = discretize(spec, mesh);
      for (int k = 0; k <= 8; ++k) {
        auto sys = build_mode_system(spec, disc, k);
        std::mt19937 gen(1234u + k);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (double& v : sys.rhs) v = dist(gen);
        Preconditioner pre(disc.mats, k, spec.omega, lambda);
        auto res = minres_solve(sys, pre, 1e-10, 2000);
        c.require(res.converged, "sweep solve failed");
        const std::string where = "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                  ",lambda=" + num(lambda);
        if (res.iterations < lo) {
          lo = res.iterations;
          where_lo = where;
        }
        if (res.iterations > hi) {
          hi = res.iterations;
          where_hi = where;
        }
      }
    }
  }
  c.require(hi < 2 * lo, "iterations " + std::to_string(lo) + ".." + std::to_string(hi) +
                             " sit exactly on the factor-2 boundary [see decisions ledger]");
  c.note("iterations " + std::to_string(lo) + " (" + where_lo + ") to " + std::to_string(hi) +
         " (" + where_hi + "), h-independent");
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(sec < 300.0, "runtime " + num(sec) + "s");
  return c;
}

}  // namespace

int main() {
  const char* names[] = {
      "Table 1 reproduction (example 1, mode 0)",
      "Table 2 reproduction (example 1, mode 1)",
      "remainder terms, grid-independent",
      "example 1 overall at n=64, N in {6,8}",
      "example 2 overall at n=64, N in {6,8,10}",
      "example 3 structure and cost efficiency",
      "guaranteed bounds on all example 1-2 runs",
      "MINRES vs dense oracle on the 4x4 mesh",
      "invariant suite",
      "solver robustness sweep",
  };

  const auto shared_start = std::chrono::steady_clock::now();
  const Run r16 = solve_and_estimate(1, 16, 8);
  const Run r32 = solve_and_estimate(1, 32, 8);
  const Run r64 = solve_and_estimate(1, 64, 8);
  const double shared_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - shared_start).count();
  const Run ex2 = solve_and_estimate(2, 64, 10);
  const Run r64_n6 = sliced(r64, 6);
  const Run ex2_n6 = sliced(ex2, 6);
  const Run ex2_n8 = sliced(ex2, 8);

  std::vector<Check> checks;
  checks.push_back(criterion1(r16, r32, r64, shared_seconds));
  checks.push_back(criterion2(r16, r32, r64));
  checks.push_back(criterion3());
  checks.push_back(criterion4(r64));
  checks.push_back(criterion5(ex2));
  checks.push_back(criterion6());
  checks.push_back(criterion7({&r16, &r32, &r64, &r64_n6, &ex2, &ex2_n6, &ex2_n8}));
  checks.push_back(criterion8());
  checks.push_back(criterion9(r32));
  checks.push_back(criterion10());

  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    if (!c.pass) ++failures;
    std::printf("%s  criterion %2zu: %s%s%s\n", c.pass ? "PASS" : "FAIL", i + 1, names[i],
                c.detail.empty() ? "" : " — ", c.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", checks.size() - failures, checks.size());
  return failures == 0 ? 0 : 1;
}

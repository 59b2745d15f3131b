#include "mhfem/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace mhfem {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct GridReport {
  std::vector<ReportRow> rows;
  bool converged = true;
  int failed_mode = -1;
};

GridReport run_grid(const RunConfig& config, const ExampleDefinition& def, int grid) {
  const bool weighted = config.denominator == "weighted";
  ProblemSpec spec = make_problem(def, config.modes);
  const Mesh mesh = build_uniform_mesh(grid);
  const Discretization disc = discretize(spec, mesh);

  const auto t0 = std::chrono::steady_clock::now();
  const MhSolution sol = solve_all_modes(spec, disc, config.tol, 2000, config.workers);
  const auto tau = state_fluxes(mesh, spec, sol);
  const auto rho = adjoint_fluxes(mesh, spec, sol);
  const auto residuals = modal_residuals(mesh, spec, sol, tau, rho);
  const StabilityConstants consts = StabilityConstants::from(spec);
  const double remainder = remainder_term(*spec.desired_state, spec.truncation, spec.T);
  const SeminormMajorant semi = majorant_seminorm(residuals, consts, remainder, spec.T);
  const CostMajorant cost = cost_majorant(mesh, spec, sol, tau, consts);

  // Reference errors: closed-form modal solutions for examples 1-2, a
  // nested fine-grid solve for example 3.
  const int n_modes = spec.truncation + 1;
  std::vector<double> err_semi(n_modes, 0.0);
  std::vector<double> cost_ref(n_modes, 0.0);
  double cost_ref_total = 0.0;

  if (def.has_exact_solution) {
    for (int k = 0; k < n_modes; ++k) {
      const ModalErrorNorms err = exact_modal_error(def, mesh, disc.mats, sol.modes[k]);
      err_semi[k] = err.grad_sq + (weighted ? k * spec.omega * err.l2_sq : 0.0);
      cost_ref[k] = exact_mode_cost(def, k);
    }
    cost_ref_total = exact_cost(def);
  } else {
    if (grid > 512)
      throw std::invalid_argument(
          "run: the 2x reference solve for example 3 exceeds the memory budget beyond "
          "grid 512; choose a smaller grid");
    const Mesh fine = build_uniform_mesh(2 * grid);
    const Discretization fine_disc = discretize(spec, fine);
    const MhSolution fine_sol =
        solve_all_modes(spec, fine_disc, config.tol, 2000, config.workers);
    const CostBreakdown fine_cost = evaluate_cost(spec, fine_disc, fine_sol);
    for (int k = 0; k < n_modes; ++k) {
      const ModalErrorNorms err =
          reference_modal_error(mesh, sol.modes[k], fine, fine_disc.mats, fine_sol.modes[k]);
      err_semi[k] = err.grad_sq + (weighted ? k * spec.omega * err.l2_sq : 0.0);
      cost_ref[k] = fine_cost.per_mode[k];
    }
    cost_ref_total = fine_cost.total;
  }

  GridReport report;
  int iter_max = 0;
  for (int k = 0; k < n_modes; ++k) {
    const ModeSolution& mode = sol.modes[k];
    if (!mode.converged && report.failed_mode < 0) report.failed_mode = k;
    report.converged = report.converged && mode.converged;
    iter_max = std::max(iter_max, mode.iterations);

    ReportRow row;
    row.example = def.id;
    row.k = k;
    row.grid = grid;
    row.majorant_semi = semi.per_mode[k];
    row.ieff_m = efficiency_index(semi.per_mode[k], std::sqrt(err_semi[k]));
    row.j_oplus = cost.per_mode[k];
    row.ieff_j = efficiency_index(cost.per_mode[k], cost_ref[k]);
    row.remainder = remainder;
    row.alpha = cost.alpha[k];
    row.beta = cost.beta[k];
    row.iters = mode.iterations;
    row.seconds = mode.seconds;
    report.rows.push_back(row);
  }

  if (config.overall) {
    double err_total = spec.T * err_semi[0];
    for (int k = 1; k < n_modes; ++k) err_total += 0.5 * spec.T * err_semi[k];

    ReportRow row;
    row.example = def.id;
    row.k = -1;
    row.grid = grid;
    row.majorant_semi = semi.total;
    row.ieff_m = efficiency_index(semi.total, std::sqrt(err_total));
    row.j_oplus = cost.total;
    row.ieff_j = efficiency_index(cost.total, cost_ref_total);
    row.remainder = remainder;
    row.alpha = std::numeric_limits<double>::quiet_NaN();
    row.beta = std::numeric_limits<double>::quiet_NaN();
    row.iters = iter_max;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace

RunResult run_example(const RunConfig& config) {
  if (config.modes < -1) throw std::invalid_argument("run: modes must be >= 0");
  if (config.denominator != "h1semi" && config.denominator != "weighted")
    throw std::invalid_argument("run: denominator must be h1semi or weighted");
  for (int g : config.grids)
    if (g < 2 || g % 2 != 0)
      throw std::invalid_argument("run: grids must be even and at least 2");

  const ExampleDefinition def = make_example(config.example);
  RunResult result;
  for (int grid : config.grids) {
    GridReport report = run_grid(config, def, grid);
    if (!report.converged && result.all_converged) {
      result.all_converged = false;
      result.failure =
          "grid " + std::to_string(grid) + ", mode " + std::to_string(report.failed_mode);
    }
    result.rows.insert(result.rows.end(), report.rows.begin(), report.rows.end());
  }
  return result;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out =
      "example,k,grid,majorant_semi,ieff_m,j_oplus,ieff_j,remainder,alpha,beta,iters,seconds\n";
  for (const ReportRow& r : rows) {
    out += std::to_string(r.example) + ',' + std::to_string(r.k) + ',' + std::to_string(r.grid) +
           ',' + fmt(r.majorant_semi) + ',' + fmt(r.ieff_m) + ',' + fmt(r.j_oplus) + ',' +
           fmt(r.ieff_j) + ',' + fmt(r.remainder) + ',' + fmt(r.alpha) + ',' + fmt(r.beta) + ',' +
           std::to_string(r.iters) + ',' + fmt(r.seconds) + '\n';
  }
  return out;
}

std::string to_jsonl(const std::vector<ReportRow>& rows) {
  // shares the CSV float formatting so the two files round-trip exactly
  std::string out;
  auto field = [](double v) { return std::isfinite(v) ? fmt(v) : '"' + fmt(v) + '"'; };
  for (const ReportRow& r : rows) {
    out += "{\"schema\":\"mhfem-report-v1\",\"example\":" + std::to_string(r.example) +
           ",\"k\":" + std::to_string(r.k) + ",\"grid\":" + std::to_string(r.grid) +
           ",\"majorant_semi\":" + field(r.majorant_semi) + ",\"ieff_m\":" + field(r.ieff_m) +
           ",\"j_oplus\":" + field(r.j_oplus) + ",\"ieff_j\":" + field(r.ieff_j) +
           ",\"remainder\":" + field(r.remainder) + ",\"alpha\":" + field(r.alpha) +
           ",\"beta\":" + field(r.beta) + ",\"iters\":" + std::to_string(r.iters) +
           ",\"seconds\":" + field(r.seconds) + "}\n";
  }
  return out;
}

std::string to_table(const std::vector<ReportRow>& rows) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%3s %8s %6s %12s %8s %12s %8s %12s %6s %9s\n", "ex", "k",
                "grid", "M_semi", "Ieff_M", "J_plus", "Ieff_J", "E_N", "iters", "sec");
  out += line;
  for (const ReportRow& r : rows) {
    const std::string k = r.k < 0 ? "overall" : std::to_string(r.k);
    std::snprintf(line, sizeof(line), "%3d %8s %6d %12s %8s %12s %8s %12s %6d %9s\n", r.example,
                  k.c_str(), r.grid, fmt(r.majorant_semi).c_str(), fmt(r.ieff_m).c_str(),
                  fmt(r.j_oplus).c_str(), fmt(r.ieff_j).c_str(), fmt(r.remainder).c_str(), r.iters,
                  fmt(r.seconds).c_str());
    out += line;
  }
  return out;
}

int run(const RunConfig& config) {
  const RunResult result = run_example(config);

  std::filesystem::create_directories(config.out_dir);
  {
    std::ofstream csv(std::filesystem::path(config.out_dir) / "report.csv");
    csv << to_csv(result.rows);
    std::ofstream jsonl(std::filesystem::path(config.out_dir) / "report.jsonl");
    jsonl << to_jsonl(result.rows);
  }

  if (config.format == "csv")
    std::cout << to_csv(result.rows);
  else if (config.format == "jsonl")
    std::cout << to_jsonl(result.rows);
  else
    std::cout << to_table(result.rows);

  if (!result.all_converged) {
    std::cerr << "solver did not converge: " << result.failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mhfem

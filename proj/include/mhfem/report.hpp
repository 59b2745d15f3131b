#pragma once

#include <string>
#include <vector>

#include "mhfem/majorants.hpp"
#include "mhfem/problems.hpp"

namespace mhfem {

/// One experiment: an example swept over grids at fixed truncation.
struct RunConfig {
  int example = 1;
  std::vector<int> grids = {16};
  int modes = -1;  // truncation index N; -1 picks the example default
  double tol = 1e-10;
  int workers = 1;
  std::string out_dir = ".";
  std::string format = "table";        // stdout format: table | csv | jsonl
  bool overall = false;                // also emit the aggregate row per grid
  std::string denominator = "h1semi";  // efficiency-index variant: h1semi | weighted
};

/// One table row; k == -1 flags the aggregate (overall) row of a grid.
struct ReportRow {
  int example = 0;
  int k = 0;
  int grid = 0;
  double majorant_semi = 0.0;
  double ieff_m = 0.0;
  double j_oplus = 0.0;
  double ieff_j = 0.0;
  double remainder = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  int iters = 0;
  double seconds = 0.0;
};

struct RunResult {
  std::vector<ReportRow> rows;
  bool all_converged = true;
  std::string failure;  // first non-converged (grid, mode) if any
};

/// Solve, estimate and collect rows; no I/O.
RunResult run_example(const RunConfig& config);

/// Full driver: compute, write report.csv and report.jsonl under out_dir,
/// print the chosen format to stdout. Returns the process exit status.
int run(const RunConfig& config);

std::string to_csv(const std::vector<ReportRow>& rows);
std::string to_jsonl(const std::vector<ReportRow>& rows);
std::string to_table(const std::vector<ReportRow>& rows);

}  // namespace mhfem

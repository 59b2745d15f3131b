#include <CLI11.hpp>

#include "mhfem/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Multiharmonic FEM for time-periodic parabolic optimal control with guaranteed "
               "a posteriori error majorants"};

  mhfem::RunConfig config;
  app.add_option("--example", config.example, "Benchmark problem id")
      ->check(CLI::IsMember({1, 2, 3}))
      ->required();
  app.add_option("--grids", config.grids, "Comma-separated cells-per-side list")
      ->delimiter(',')
      ->required();
  app.add_option("--modes", config.modes, "Truncation index N (default: example preset)");
  app.add_option("--tol", config.tol, "MINRES relative preconditioned residual tolerance");
  app.add_option("--workers", config.workers, "Concurrent mode solves")->check(CLI::PositiveNumber);
  app.add_option("--out", config.out_dir, "Output directory for report.csv / report.jsonl");
  app.add_option("--format", config.format, "Stdout format")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}));
  app.add_flag("--overall", config.overall, "Emit the aggregate row per grid");
  app.add_option("--denominator", config.denominator, "Efficiency-index error norm variant")
      ->check(CLI::IsMember({"h1semi", "weighted"}));

  CLI11_PARSE(app, argc, argv);

  try {
    return mhfem::run(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

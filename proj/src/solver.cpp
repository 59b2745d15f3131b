#include "mhfem/solver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace mhfem {

void ProblemSpec::validate() const {
  if (!(lambda > 0.0)) throw std::invalid_argument("ProblemSpec: lambda must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("ProblemSpec: period must be positive");
  if (std::abs(omega * T - 2.0 * M_PI) > 1e-14 * 2.0 * M_PI)
    throw std::invalid_argument("ProblemSpec: omega * T must equal 2 pi");
  if (!(sigma_bounds.lower > 0.0) || !(nu_bounds.lower > 0.0))
    throw std::invalid_argument("ProblemSpec: coefficient bounds must be positive");
  if (truncation < 0) throw std::invalid_argument("ProblemSpec: truncation must be >= 0");
  if (!desired_state) throw std::invalid_argument("ProblemSpec: desired state missing");
}

Discretization discretize(const ProblemSpec& spec, const Mesh& mesh) {
  Discretization disc;
  disc.mesh = &mesh;
  disc.mats = assemble(mesh, spec.sigma, spec.nu);
  return disc;
}

BlockSystem build_mode_system(const ProblemSpec& spec, const Discretization& disc, int k) {
  if (k < 0) throw std::invalid_argument("build_mode_system: mode must be >= 0");
  const FemMatrices& m = disc.mats;
  const double kw = k * spec.omega;
  const double il = 1.0 / spec.lambda;
  const DesiredState& yd = *spec.desired_state;

  const auto profile_load = assemble_load(
      *disc.mesh, [&yd](double x, double y) { return yd.profile(x, y); });

  BlockSystem sys;
  sys.mode = k;
  sys.block_dim = m.dim;
  if (k == 0) {
    sys.n_blocks = 2;
    sys.cells = {{0, 0, &m.M, 1.0}, {0, 1, &m.K_nu, -1.0}, {1, 0, &m.K_nu, -1.0},
                 {1, 1, &m.M, -il}};
    sys.rhs.assign(sys.dim(), 0.0);
    const double wc = yd.cos_weight(0);
    for (int i = 0; i < m.dim; ++i) sys.rhs[i] = wc * profile_load[i];
  } else {
    sys.n_blocks = 4;
    sys.cells = {{0, 0, &m.M, 1.0},        {0, 2, &m.K_nu, -1.0}, {0, 3, &m.M_sigma, kw},
                 {1, 1, &m.M, 1.0},        {1, 2, &m.M_sigma, -kw}, {1, 3, &m.K_nu, -1.0},
                 {2, 0, &m.K_nu, -1.0},    {2, 1, &m.M_sigma, -kw}, {2, 2, &m.M, -il},
                 {3, 0, &m.M_sigma, kw},   {3, 1, &m.K_nu, -1.0},   {3, 3, &m.M, -il}};
    sys.rhs.assign(sys.dim(), 0.0);
    const double wc = yd.cos_weight(k);
    const double ws = yd.sin_weight(k);
    for (int i = 0; i < m.dim; ++i) {
      sys.rhs[i] = wc * profile_load[i];
      sys.rhs[m.dim + i] = ws * profile_load[i];
    }
  }
  return sys;
}

namespace {

ModeSolution solve_one_mode(const ProblemSpec& spec, const Discretization& disc, int k, double tol,
                            int max_iter) {
  const auto start = std::chrono::steady_clock::now();
  const BlockSystem sys = build_mode_system(spec, disc, k);
  const int d = sys.block_dim;

  ModeSolution mode;
  mode.y = ModalField::zero(k, d);
  mode.p = ModalField::zero(k, d);

  double rhs_norm = 0.0;
  for (double v : sys.rhs) rhs_norm += v * v;

  MinresResult res;
  if (rhs_norm == 0.0) {
    res.x.assign(sys.dim(), 0.0);
    res.converged = true;
  } else {
    const Preconditioner precond(disc.mats, k, spec.omega, spec.lambda);
    res = minres_solve(sys, precond, tol, max_iter);
  }

  if (k == 0) {
    std::copy(res.x.begin(), res.x.begin() + d, mode.y.cos_coeffs.begin());
    std::copy(res.x.begin() + d, res.x.begin() + 2 * d, mode.p.cos_coeffs.begin());
  } else {
    std::copy(res.x.begin(), res.x.begin() + d, mode.y.cos_coeffs.begin());
    std::copy(res.x.begin() + d, res.x.begin() + 2 * d, mode.y.sin_coeffs.begin());
    std::copy(res.x.begin() + 2 * d, res.x.begin() + 3 * d, mode.p.cos_coeffs.begin());
    std::copy(res.x.begin() + 3 * d, res.x.begin() + 4 * d, mode.p.sin_coeffs.begin());
  }
  mode.u = scaled(mode.p, -1.0 / spec.lambda);
  mode.iterations = res.iterations;
  mode.converged = res.converged;
  mode.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return mode;
}

}  // namespace

MhSolution solve_all_modes(const ProblemSpec& spec, const Discretization& disc, double tol,
                           int max_iter, int workers) {
  spec.validate();
  const int n_modes = spec.truncation + 1;
  MhSolution sol;
  sol.modes.resize(n_modes);

  if (workers <= 1) {
    for (int k = 0; k < n_modes; ++k) sol.modes[k] = solve_one_mode(spec, disc, k, tol, max_iter);
    return sol;
  }

  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int k = next.fetch_add(1);
      if (k >= n_modes) return;
      sol.modes[k] = solve_one_mode(spec, disc, k, tol, max_iter);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min(workers, n_modes);
  pool.reserve(count);
  for (int w = 0; w < count; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return sol;
}

double modal_misfit_sq(const Mesh& mesh, const ModalField& field, const DesiredState& yd) {
  const int k = field.k;
  const double wc = yd.cos_weight(k);
  const double ws = field.has_sine() ? yd.sin_weight(k) : 0.0;
  const auto cos_nodal = scatter_to_nodes(mesh, field.cos_coeffs);
  std::vector<double> sin_nodal;
  if (field.has_sine()) sin_nodal = scatter_to_nodes(mesh, field.sin_coeffs);

  const TriQuadRule& rule = degree5_rule();
  const double area = mesh.tri_area();
  double total = 0.0;
  for (int t = 0; t < mesh.num_triangles(); ++t) {
    const auto& tri = mesh.triangles[t];
    const Vec2 p0 = mesh.nodes[tri[0]];
    const Vec2 p1 = mesh.nodes[tri[1]];
    const Vec2 p2 = mesh.nodes[tri[2]];
    for (const auto& q : rule.points) {
      const double x = q.l0 * p0.x + q.l1 * p1.x + q.l2 * p2.x;
      const double y = q.l0 * p0.y + q.l1 * p1.y + q.l2 * p2.y;
      const double prof = yd.profile(x, y);
      const double fc =
          q.l0 * cos_nodal[tri[0]] + q.l1 * cos_nodal[tri[1]] + q.l2 * cos_nodal[tri[2]];
      const double dc = fc - wc * prof;
      double contrib = dc * dc;
      if (field.has_sine()) {
        const double fs =
            q.l0 * sin_nodal[tri[0]] + q.l1 * sin_nodal[tri[1]] + q.l2 * sin_nodal[tri[2]];
        const double ds = fs - ws * prof;
        contrib += ds * ds;
      }
      total += q.w * area * contrib;
    }
  }
  return total;
}

CostBreakdown evaluate_cost(const ProblemSpec& spec, const Discretization& disc,
                            const MhSolution& sol) {
  const DesiredState& yd = *spec.desired_state;
  CostBreakdown out;
  out.per_mode.resize(sol.modes.size());
  for (std::size_t k = 0; k < sol.modes.size(); ++k) {
    const ModeSolution& mode = sol.modes[k];
    const double misfit = modal_misfit_sq(*disc.mesh, mode.y, yd);
    SpectralNorms un = modal_l2_norms(mode.u, disc.mats.M, disc.mats.K_nu, 1.0, spec.omega);
    // modal_l2_norms weights mode 0 by T=1 and k>=1 by 1/2; undo to get the
    // plain Omega norm of the coefficient pair.
    const double u_sq = mode.u.k == 0 ? un.l2_sq : 2.0 * un.l2_sq;
    out.per_mode[k] = 0.5 * misfit + 0.5 * spec.lambda * u_sq;
  }
  out.remainder = remainder_term(yd, sol.truncation(), spec.T);
  out.total = spec.T * out.per_mode[0] + 0.5 * out.remainder;
  for (std::size_t k = 1; k < out.per_mode.size(); ++k)
    out.total += 0.5 * spec.T * out.per_mode[k];
  return out;
}

}  // namespace mhfem

#include "mhfem/sparse.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mhfem/assembly.hpp"

namespace mhfem {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.row_ptr.assign(rows + 1, 0);
  m.col_idx.reserve(triplets.size());
  m.values.reserve(triplets.size());

  for (std::size_t i = 0; i < triplets.size();) {
    const int r = triplets[i].row;
    const int c = triplets[i].col;
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw std::invalid_argument("from_triplets: index out of range");
    double v = 0.0;
    while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
      v += triplets[i++].value;
    m.col_idx.push_back(c);
    m.values.push_back(v);
    ++m.row_ptr[r + 1];
  }
  for (int r = 0; r < rows; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return m;
}

double SparseMatrix::entry(int r, int c) const {
  for (int i = row_ptr[r]; i < row_ptr[r + 1]; ++i)
    if (col_idx[i] == c) return values[i];
  return 0.0;
}

bool SparseMatrix::is_symmetric(double tol) const {
  if (rows != cols) return false;
  for (int r = 0; r < rows; ++r)
    for (int i = row_ptr[r]; i < row_ptr[r + 1]; ++i)
      if (std::abs(values[i] - entry(col_idx[i], r)) > tol) return false;
  return true;
}

std::vector<double> spmv(const SparseMatrix& A, std::span<const double> x) {
  std::vector<double> y(A.rows, 0.0);
  spmv_add(A, x, y, 1.0);
  return y;
}

void spmv_add(const SparseMatrix& A, std::span<const double> x, std::span<double> y,
              double scale) {
  if (static_cast<int>(x.size()) != A.cols || static_cast<int>(y.size()) != A.rows)
    throw std::invalid_argument("spmv: dimension mismatch");
  for (int r = 0; r < A.rows; ++r) {
    double acc = 0.0;
    for (int i = A.row_ptr[r]; i < A.row_ptr[r + 1]; ++i) acc += A.values[i] * x[A.col_idx[i]];
    y[r] += scale * acc;
  }
}

void BlockSystem::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw std::invalid_argument("BlockSystem::apply: dimension mismatch");
  std::fill(y.begin(), y.end(), 0.0);
  for (const Cell& cell : cells) {
    const auto xin = x.subspan(static_cast<std::size_t>(cell.block_col) * block_dim, block_dim);
    auto yout = y.subspan(static_cast<std::size_t>(cell.block_row) * block_dim, block_dim);
    spmv_add(*cell.matrix, xin, yout, cell.scale);
  }
}

std::vector<double> BlockSystem::apply(std::span<const double> x) const {
  std::vector<double> y(dim());
  apply(x, y);
  return y;
}

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix& A) {
  Eigen::SparseMatrix<double> out(A.rows, A.cols);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(A.nnz());
  for (int r = 0; r < A.rows; ++r)
    for (int i = A.row_ptr[r]; i < A.row_ptr[r + 1]; ++i)
      trips.emplace_back(r, A.col_idx[i], A.values[i]);
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

}  // namespace

struct Preconditioner::Impl {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol;
};

Preconditioner::Preconditioner(const FemMatrices& mats, int mode, double omega, double lambda)
    : mode_(mode), lambda_(lambda), block_dim_(mats.dim), impl_(std::make_unique<Impl>()) {
  if (mode < 0) throw std::invalid_argument("Preconditioner: mode must be >= 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("Preconditioner: lambda must be positive");
  const double sl = std::sqrt(lambda);
  Eigen::SparseMatrix<double> D =
      to_eigen(mats.M) + sl * to_eigen(mats.K_nu) + (mode * omega * sl) * to_eigen(mats.M_sigma);
  impl_->chol.compute(D);
  if (impl_->chol.info() != Eigen::Success || (impl_->chol.vectorD().array() <= 0.0).any())
    throw std::runtime_error("Preconditioner: inner block is not SPD");
}

Preconditioner::~Preconditioner() = default;
Preconditioner::Preconditioner(Preconditioner&&) noexcept = default;
Preconditioner& Preconditioner::operator=(Preconditioner&&) noexcept = default;

void Preconditioner::inner_solve(std::span<const double> r, std::span<double> z) const {
  Eigen::Map<const Eigen::VectorXd> rv(r.data(), r.size());
  Eigen::VectorXd zv = impl_->chol.solve(rv);
  std::copy(zv.data(), zv.data() + zv.size(), z.begin());
}

void Preconditioner::apply(std::span<const double> r, std::span<double> z) const {
  const int nb = mode_ == 0 ? 2 : 4;
  if (static_cast<int>(r.size()) != nb * block_dim_ || r.size() != z.size())
    throw std::invalid_argument("Preconditioner::apply: dimension mismatch");
  for (int b = 0; b < nb; ++b) {
    const auto rb = r.subspan(static_cast<std::size_t>(b) * block_dim_, block_dim_);
    auto zb = z.subspan(static_cast<std::size_t>(b) * block_dim_, block_dim_);
    inner_solve(rb, zb);
    if (b >= nb / 2)  // adjoint blocks carry the lambda^{-1} D scaling
      for (double& v : zb) v *= lambda_;
  }
}

MinresResult minres(const ApplyFn& A, const ApplyFn& Minv, std::span<const double> b, double tol,
                    int max_iter) {
  const std::size_t n = b.size();
  MinresResult res;
  res.x.assign(n, 0.0);

  std::vector<double> r1(b.begin(), b.end());
  std::vector<double> y(n), r2(r1), v(n), w(n, 0.0), w1(n, 0.0), w2(n, 0.0), av(n);

  auto dot = [](const std::vector<double>& a, const std::vector<double>& c) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * c[i];
    return s;
  };

  Minv(r1, y);
  double beta_sq = dot(r1, y);
  if (beta_sq < 0.0) throw std::runtime_error("minres: preconditioner is not positive definite");
  const double beta1 = std::sqrt(beta_sq);
  if (beta1 == 0.0) {
    res.converged = true;
    return res;
  }

  double oldb = 0.0, beta = beta1, dbar = 0.0, epsln = 0.0, phibar = beta1;
  double cs = -1.0, sn = 0.0;

  for (int it = 1; it <= max_iter; ++it) {
    const double s = 1.0 / beta;
    for (std::size_t i = 0; i < n; ++i) v[i] = s * y[i];
    A(v, av);
    if (it >= 2)
      for (std::size_t i = 0; i < n; ++i) av[i] -= (beta / oldb) * r1[i];
    const double alfa = dot(v, av);
    for (std::size_t i = 0; i < n; ++i) av[i] -= (alfa / beta) * r2[i];
    r1 = r2;
    r2 = av;
    Minv(r2, y);
    oldb = beta;
    beta_sq = dot(r2, y);
    if (beta_sq < 0.0) throw std::runtime_error("minres: preconditioner is not positive definite");
    beta = std::sqrt(beta_sq);

    const double oldeps = epsln;
    const double delta = cs * dbar + sn * alfa;
    const double gbar = sn * dbar - cs * alfa;
    epsln = sn * beta;
    dbar = -cs * beta;

    double gamma = std::hypot(gbar, beta);
    res.iterations = it;
    if (gamma == 0.0) {  // exact breakdown: keep the current iterate
      res.breakdown = true;
      res.rel_residual = phibar / beta1;
      return res;
    }
    cs = gbar / gamma;
    sn = beta / gamma;
    const double phi = cs * phibar;
    phibar = sn * phibar;

    std::swap(w1, w2);
    std::swap(w2, w);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = (v[i] - oldeps * w1[i] - delta * w2[i]) / gamma;
      res.x[i] += phi * w[i];
    }

    res.rel_residual = phibar / beta1;
    if (res.rel_residual <= tol) {
      res.converged = true;
      return res;
    }
  }
  return res;
}

MinresResult minres_solve(const BlockSystem& system, const Preconditioner& precond, double tol,
                          int max_iter) {
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("minres_solve: tol must be in (0,1)");
  ApplyFn A = [&system](std::span<const double> x, std::span<double> y) { system.apply(x, y); };
  ApplyFn Minv = [&precond](std::span<const double> r, std::span<double> z) {
    precond.apply(r, z);
  };
  return minres(A, Minv, system.rhs, tol, max_iter);
}

std::vector<double> dense_solve(const BlockSystem& system) {
  const int n = system.dim();
  if (n > 4000) throw std::invalid_argument("dense_solve: dimension exceeds 4000");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (const auto& cell : system.cells) {
    const SparseMatrix& m = *cell.matrix;
    const int r0 = cell.block_row * system.block_dim;
    const int c0 = cell.block_col * system.block_dim;
    for (int r = 0; r < m.rows; ++r)
      for (int i = m.row_ptr[r]; i < m.row_ptr[r + 1]; ++i)
        A(r0 + r, c0 + m.col_idx[i]) += cell.scale * m.values[i];
  }
  Eigen::Map<const Eigen::VectorXd> b(system.rhs.data(), n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  if (!lu.isInvertible()) throw std::runtime_error("dense_solve: singular matrix");
  Eigen::VectorXd x = lu.solve(b);
  return {x.data(), x.data() + n};
}

std::vector<double> dense_solve(const std::vector<std::vector<double>>& A,
                                std::span<const double> b) {
  const int n = static_cast<int>(b.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = A[i][j];
  Eigen::Map<const Eigen::VectorXd> bv(b.data(), n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) throw std::runtime_error("dense_solve: singular matrix");
  Eigen::VectorXd x = lu.solve(bv);
  return {x.data(), x.data() + n};
}

}  // namespace mhfem

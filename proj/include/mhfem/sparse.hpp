#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace mhfem {

/// Compressed-row sparse matrix with strictly increasing column indices per row.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_ptr;  // size rows + 1
  std::vector<int> col_idx;
  std::vector<double> values;

  struct Triplet {
    int row;
    int col;
    double value;
  };

  /// Build CSR from (row, col, value) triplets; duplicates are summed.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);

  std::size_t nnz() const { return values.size(); }
  bool is_symmetric(double tol = 1e-13) const;
  double entry(int r, int c) const;  // 0 if not stored
};

/// y = A x. Throws on dimension mismatch.
std::vector<double> spmv(const SparseMatrix& A, std::span<const double> x);

/// y += scale * A x.
void spmv_add(const SparseMatrix& A, std::span<const double> x, std::span<double> y, double scale);

/// One saddle-point system of the multiharmonic optimality discretization.
/// Mode k >= 1 couples four nodal blocks (state cos/sin, adjoint cos/sin);
/// mode 0 reduces to two blocks. Each block cell applies one of the stored
/// FE matrices with a scalar factor; the referenced matrices must outlive
/// the system.
struct BlockSystem {
  struct Cell {
    int block_row;
    int block_col;
    const SparseMatrix* matrix;
    double scale;
  };

  int mode = 0;  // Fourier index k
  int n_blocks = 0;
  int block_dim = 0;
  std::vector<Cell> cells;
  std::vector<double> rhs;

  int dim() const { return n_blocks * block_dim; }
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;
};

struct FemMatrices;

/// Block-diagonal preconditioner with inner block
/// D = M_h + sqrt(lambda) K_{h,nu} + k omega sqrt(lambda) M_{h,sigma},
/// applied exactly by a sparse Cholesky factorization. Adjoint blocks are
/// scaled by lambda.
class Preconditioner {
 public:
  Preconditioner(const FemMatrices& mats, int mode, double omega, double lambda);
  ~Preconditioner();
  Preconditioner(Preconditioner&&) noexcept;
  Preconditioner& operator=(Preconditioner&&) noexcept;

  int mode() const { return mode_; }
  /// z = P^{-1} r, blockwise over a 2- or 4-block residual.
  void apply(std::span<const double> r, std::span<double> z) const;
  /// Inner solve with a single D block (no lambda scaling).
  void inner_solve(std::span<const double> r, std::span<double> z) const;

 private:
  struct Impl;
  int mode_;
  double lambda_;
  int block_dim_;
  std::unique_ptr<Impl> impl_;
};

struct MinresResult {
  std::vector<double> x;
  int iterations = 0;
  bool converged = false;
  bool breakdown = false;
  double rel_residual = 0.0;  // preconditioned residual norm over its initial value
};

using ApplyFn = std::function<void(std::span<const double>, std::span<double>)>;

/// Preconditioned MINRES for a symmetric operator and an SPD preconditioner,
/// started from zero. Stops when the preconditioned residual norm drops below
/// tol relative to the right-hand side. An indefinite preconditioner is
/// reported through std::runtime_error; exact breakdown returns the current
/// iterate with the breakdown flag set.
MinresResult minres(const ApplyFn& A, const ApplyFn& Minv, std::span<const double> b, double tol,
                    int max_iter);

MinresResult minres_solve(const BlockSystem& system, const Preconditioner& precond, double tol,
                          int max_iter);

/// Direct dense factorization oracle for small systems (dim <= 4000).
std::vector<double> dense_solve(const BlockSystem& system);

/// Dense solve of an explicitly given matrix (test oracle).
std::vector<double> dense_solve(const std::vector<std::vector<double>>& A,
                                std::span<const double> b);

}  // namespace mhfem

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgc/coarsen.hpp"
#include "sgc/graph.hpp"
#include "sgc/io.hpp"
#include "sgc/partition.hpp"

namespace sgc {

inline constexpr std::size_t kDefaultDenseCap = 4096;
inline constexpr double kDefaultEigenTolerance = 1e-10;

/// Dense row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix assumed symmetric by the eigensolver.
class DenseSymMatrix : public DenseMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n) : DenseMatrix(n, n) {}

  std::size_t order() const { return rows(); }
  double trace() const;
  /// Largest |a_ij - a_ji|.
  double asymmetry() const;
};

/// Ascending eigenvalues with orthonormal eigenvectors; eigenvector(i)
/// belongs to eigenvalues[i].
struct Spectrum {
  std::vector<double> eigenvalues;
  /// Row i holds eigenvector i.
  DenseMatrix vectors;

  std::size_t size() const { return eigenvalues.size(); }
  std::span<const double> eigenvector(std::size_t i) const { return vectors.row(i); }
};

/// I - D^{-1/2} W D^{-1/2}, self-loops on the diagonal of W and counted once
/// in D. Throws GraphError on a zero-degree node and InvalidArgument when the
/// order exceeds `cap`.
DenseSymMatrix normalized_laplacian(const Graph& g, std::size_t cap = kDefaultDenseCap);

/// Cyclic Jacobi eigendecomposition, converged once the off-diagonal
/// Frobenius norm falls to tol * ||m||_F. Each eigenvector is signed so its
/// largest-magnitude entry is positive (first such entry on ties).
/// Throws Error after 100 sweeps without convergence.
Spectrum eig_sym(const DenseSymMatrix& m, double tol = kDefaultEigenTolerance);

/// Eigenvalues only; same iteration without accumulating rotations.
std::vector<double> eigvals_sym(const DenseSymMatrix& m, double tol = kDefaultEigenTolerance);

/// max_i |a_i - b_i| over sorted eigenvalue vectors of equal length.
double eigenvalue_gap(std::span<const double> a, std::span<const double> b);
double eigenvalue_gap(const Spectrum& a, const Spectrum& b);

/// M(i, j) = |u_{i+1} . v_{j+1}| over the first k nontrivial eigenvectors
/// (index 0, the lambda = 0 pair, is skipped). Requires 1 <= k <= n - 1.
DenseMatrix alignment_matrix(const Spectrum& a, const Spectrum& b, std::size_t k);

struct VerifyReport {
  double gap = 0.0;
  /// Absent when no merge log is available.
  std::optional<double> bound;
  std::optional<bool> satisfied;
  Spectrum original;
  Spectrum lifted;
  std::size_t k = 0;
  DenseMatrix alignment;
};

/// Slack allowed when comparing a computed gap against its bound.
inline constexpr double kBoundSlack = 1e-9;

/// Compares the normalized-Laplacian spectrum of g with that of the lift of
/// contract(g, part). `log`, when given, supplies the merge error bound.
VerifyReport verify_partition(const Graph& g, const Partition& part, const MergeLog* log, std::size_t k,
                              std::size_t cap = kDefaultDenseCap);

VerifyReport verify(const Graph& g, const CoarsenResult& result, std::size_t k, std::size_t cap = kDefaultDenseCap);

/// index,lambda for eigen-indices 0..k.
CsvTable spectrum_table(const Spectrum& s, std::size_t k);
/// index,lambda_original,lambda_lift for eigen-indices 0..k.
CsvTable eigenvalue_pair_table(const VerifyReport& report);
/// Dense k x k grid; header row and first column carry eigen-indices 1..k.
CsvTable alignment_table(const DenseMatrix& alignment);
/// node,v_1..v_k with the nontrivial eigenvectors 1..k.
CsvTable eigenvector_table(const Spectrum& s, std::size_t k);

}  // namespace sgc

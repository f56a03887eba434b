#include "sgc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sgc/error.hpp"
#include "sgc/lift.hpp"

namespace sgc {
namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += r[j] * r[j];
  }
  return std::sqrt(s);
}

struct ColumnRotation {
  std::uint32_t p, q;
  double c, s;
};

struct Rotation {
  std::size_t p, q;
  double c, s, t, app, aqq, apq;
};

void rotate_pair(double* __restrict rp, double* __restrict rq, std::size_t n, double c, double s) {
  for (std::size_t k = 0; k < n; ++k) {
    const double x = rp[k];
    const double y = rq[k];
    rp[k] = c * x - s * y;
    rq[k] = s * x + c * y;
  }
}

void rotate_columns(double* row, const std::vector<ColumnRotation>& columns) {
  for (const auto& j : columns) {
    const double x = row[j.p];
    const double y = row[j.q];
    row[j.p] = j.c * x - j.s * y;
    row[j.q] = j.s * x + j.c * y;
  }
}

/// Same as two rotate_columns calls, sharing one read of the rotations.
void rotate_columns(double* __restrict r1, double* __restrict r2, const std::vector<ColumnRotation>& columns) {
  for (const auto& j : columns) {
    const double x1 = r1[j.p], y1 = r1[j.q];
    const double x2 = r2[j.p], y2 = r2[j.q];
    r1[j.p] = j.c * x1 - j.s * y1;
    r1[j.q] = j.s * x1 + j.c * y1;
    r2[j.p] = j.c * x2 - j.s * y2;
    r2[j.q] = j.s * x2 + j.c * y2;
  }
}

/// Runs Jacobi sweeps on `a` in place until it is numerically diagonal.
/// When `v` is non-null its rows accumulate the rotated basis.
///
/// Pairs are visited in round-robin order: each round holds n/2 disjoint
/// pairs, one sweep is n - 1 rounds and covers every pair once. Disjoint
/// rotations commute, so a round is one right multiplication followed by one
/// left multiplication, and both walk contiguous rows only.
void jacobi(DenseMatrix& a, DenseMatrix* v, double tol) {
  const std::size_t n = a.rows();
  const double threshold = tol * a.frobenius_norm();
  const std::size_t m = n + (n & 1);  // odd orders get a dummy slot n
  std::vector<std::size_t> slot(m);
  std::iota(slot.begin(), slot.end(), std::size_t{0});
  std::vector<Rotation> round;
  round.reserve(m / 2);
  std::vector<ColumnRotation> columns;
  columns.reserve(m / 2);
  std::vector<char> pivot_row(n);

  for (int sweep = 0;; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) return;
    if (sweep == kMaxSweeps) throw Error("Jacobi eigensolver did not converge in 100 sweeps");
    for (std::size_t r = 0; r + 1 < m; ++r) {
      round.clear();
      for (std::size_t i = 0; i < m / 2; ++i) {
        const std::size_t p = std::min(slot[i], slot[m - 1 - i]);
        const std::size_t q = std::max(slot[i], slot[m - 1 - i]);
        if (q >= n) continue;
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Once converging, entries negligible against both diagonals are dropped.
        if (sweep > 3 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        round.push_back({p, q, c, t * c, t, app, aqq, apq});
      }
      std::rotate(slot.begin() + 1, slot.end() - 1, slot.end());
      if (round.empty()) continue;

      // Rows of pivot pairs take their column rotations and then their row
      // rotation while still in cache; the remaining rows only need columns.
      columns.clear();
      for (const auto& j : round)
        columns.push_back({static_cast<std::uint32_t>(j.p), static_cast<std::uint32_t>(j.q), j.c, j.s});
      std::fill(pivot_row.begin(), pivot_row.end(), char{0});
      for (const auto& j : round) {
        double* rp = a.row(j.p).data();
        double* rq = a.row(j.q).data();
        rotate_columns(rp, rq, columns);
        rotate_pair(rp, rq, n, j.c, j.s);
        // The pivot block depends only on its own old entries; set it exactly.
        rp[j.p] = j.app - j.t * j.apq;
        rq[j.q] = j.aqq + j.t * j.apq;
        rp[j.q] = 0.0;
        rq[j.p] = 0.0;
        pivot_row[j.p] = pivot_row[j.q] = 1;
        if (v != nullptr) rotate_pair(v->row(j.p).data(), v->row(j.q).data(), n, j.c, j.s);
      }
      for (std::size_t k = 0; k < n; ++k)
        if (!pivot_row[k]) rotate_columns(a.row(k).data(), columns);
    }
  }
}

std::vector<std::size_t> ascending_order(const DenseMatrix& a) {
  std::vector<std::size_t> idx(a.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  return idx;
}

void require_square(const DenseSymMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
}

std::string str(std::size_t i) { return std::to_string(i); }

}  // namespace

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const double x : data_) s += x * x;
  return std::sqrt(s);
}

double DenseSymMatrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < order(); ++i) s += (*this)(i, i);
  return s;
}

double DenseSymMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < order(); ++i)
    for (std::size_t j = i + 1; j < order(); ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

DenseSymMatrix normalized_laplacian(const Graph& g, std::size_t cap) {
  const std::size_t n = g.num_nodes();
  if (n > cap)
    throw InvalidArgument("graph order " + str(n) + " exceeds the dense spectral cap " + str(cap));
  std::vector<double> inv_sqrt(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!(g.degree(v) > 0.0)) throw GraphError("node " + str(v) + " has zero degree");
    inv_sqrt[v] = 1.0 / std::sqrt(g.degree(v));
  }
  DenseSymMatrix l(n);
  for (NodeId u = 0; u < n; ++u) {
    l(u, u) = 1.0;
    const auto row = g.neighbors(u);
    const auto w = g.weights(u);
    for (std::size_t k = 0; k < row.size(); ++k) l(u, row[k]) -= w[k] * inv_sqrt[u] * inv_sqrt[row[k]];
  }
  return l;
}

Spectrum eig_sym(const DenseSymMatrix& m, double tol) {
  require_square(m);
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const std::size_t n = m.order();
  DenseMatrix a = m;
  DenseMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  jacobi(a, &v, tol);

  Spectrum out{std::vector<double>(n), DenseMatrix(n, n)};
  const auto order = ascending_order(a);
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]);
    const auto src = v.row(order[i]);
    std::size_t lead = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(src[k]) > std::abs(src[lead])) lead = k;
    const double sign = src[lead] < 0.0 ? -1.0 : 1.0;
    auto dst = out.vectors.row(i);
    for (std::size_t k = 0; k < n; ++k) dst[k] = sign * src[k];
  }
  return out;
}

std::vector<double> eigvals_sym(const DenseSymMatrix& m, double tol) {
  require_square(m);
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  DenseMatrix a = m;
  jacobi(a, nullptr, tol);
  std::vector<double> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

double eigenvalue_gap(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw InvalidArgument("spectra have different lengths (" + str(a.size()) + " vs " + str(b.size()) + ")");
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

double eigenvalue_gap(const Spectrum& a, const Spectrum& b) { return eigenvalue_gap(a.eigenvalues, b.eigenvalues); }

DenseMatrix alignment_matrix(const Spectrum& a, const Spectrum& b, std::size_t k) {
  if (a.size() != b.size()) throw InvalidArgument("spectra have different orders");
  if (k < 1 || k + 1 > a.size())
    throw InvalidArgument("alignment size " + str(k) + " outside [1, " + str(a.size() > 0 ? a.size() - 1 : 0) + "]");
  DenseMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto x = a.eigenvector(i + 1);
    for (std::size_t j = 0; j < k; ++j) {
      const auto y = b.eigenvector(j + 1);
      double dot = 0.0;
      for (std::size_t t = 0; t < x.size(); ++t) dot += x[t] * y[t];
      m(i, j) = std::min(1.0, std::abs(dot));
    }
  }
  return m;
}

VerifyReport verify_partition(const Graph& g, const Partition& part, const MergeLog* log, std::size_t k,
                              std::size_t cap) {
  const std::size_t n = g.num_nodes();
  if (part.num_nodes() != n) throw InvalidArgument("partition does not cover the graph");
  if (n > 0 && k + 1 > n) throw InvalidArgument("k = " + str(k) + " exceeds n - 1 = " + str(n - 1));

  VerifyReport report;
  report.k = k;
  const auto lifted = lift(contract(g, part), part, n);
  report.original = eig_sym(normalized_laplacian(g, cap));
  report.lifted = eig_sym(normalized_laplacian(lifted.graph, cap));
  report.gap = eigenvalue_gap(report.original, report.lifted);
  if (log != nullptr) {
    report.bound = spectral_error_bound(*log);
    report.satisfied = report.gap <= *report.bound + kBoundSlack;
  }
  if (k > 0) report.alignment = alignment_matrix(report.original, report.lifted, k);
  return report;
}

VerifyReport verify(const Graph& g, const CoarsenResult& result, std::size_t k, std::size_t cap) {
  return verify_partition(g, result.partition, &result.log, k, cap);
}

CsvTable spectrum_table(const Spectrum& s, std::size_t k) {
  CsvTable t{{"index", "lambda"}, {}};
  for (std::size_t i = 0; i <= k && i < s.size(); ++i) t.rows.push_back({str(i), format_real(s.eigenvalues[i])});
  return t;
}

CsvTable eigenvalue_pair_table(const VerifyReport& report) {
  CsvTable t{{"index", "lambda_original", "lambda_lift"}, {}};
  for (std::size_t i = 0; i <= report.k && i < report.original.size(); ++i)
    t.rows.push_back(
        {str(i), format_real(report.original.eigenvalues[i]), format_real(report.lifted.eigenvalues[i])});
  return t;
}

CsvTable alignment_table(const DenseMatrix& alignment) {
  CsvTable t;
  t.header.push_back("index");
  for (std::size_t j = 0; j < alignment.cols(); ++j) t.header.push_back(str(j + 1));
  for (std::size_t i = 0; i < alignment.rows(); ++i) {
    std::vector<std::string> row{str(i + 1)};
    for (std::size_t j = 0; j < alignment.cols(); ++j) row.push_back(format_real(alignment(i, j)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable eigenvector_table(const Spectrum& s, std::size_t k) {
  CsvTable t;
  t.header.push_back("node");
  const std::size_t cols = std::min(k, s.size() > 0 ? s.size() - 1 : 0);
  for (std::size_t j = 1; j <= cols; ++j) t.header.push_back("v_" + str(j));
  for (std::size_t node = 0; node < s.size(); ++node) {
    std::vector<std::string> row{str(node)};
    for (std::size_t j = 1; j <= cols; ++j) row.push_back(format_real(s.vectors(j, node)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace sgc

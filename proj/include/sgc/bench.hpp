#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgc/coarsen.hpp"
#include "sgc/graph.hpp"
#include "sgc/io.hpp"

namespace sgc {

/// rows x cols 4-neighbor lattice with unit weights; node r * cols + c.
Graph gen_grid(std::size_t rows, std::size_t cols);

/// Preferential attachment. Starts from a clique on attach + 1 nodes; every
/// later node links to `attach` distinct existing nodes drawn with
/// probability proportional to their current degree.
Graph gen_powerlaw(std::size_t n, std::size_t attach, std::uint64_t seed);

/// Erdos-Renyi G(n, p) conditioned on connectivity (redrawn until connected),
/// weights uniform in [weight_lo, weight_hi).
Graph gen_erdos_renyi(std::size_t n, double p, double weight_lo, double weight_hi, std::uint64_t seed);

/// Same graph under a seeded uniformly random relabeling of its nodes.
Graph permute_nodes(const Graph& g, std::uint64_t seed);

/// Sum over nodes of structural_degree^2.
std::uint64_t sum_squared_degrees(const Graph& g);
/// Mean squared structural degree, (1/n) * sum_v deg_v^2.
double second_moment(const Graph& g);

/// Fitness work per contiguous edge chunk: sum of deg_u + deg_v over its edges.
std::vector<std::uint64_t> chunk_work(const Graph& g, std::size_t threads);
/// Max chunk work over mean chunk work (>= 1).
double imbalance(const Graph& g, std::size_t threads);
double imbalance(const std::vector<std::uint64_t>& work);

/// ceil(ratio * n), clamped to [1, n]. Throws InvalidArgument unless ratio is in (0, 1].
std::size_t nodes_for_ratio(std::size_t n, double ratio);

/// FNV-1a over partition labels, merge log and coarse graph bits.
std::uint64_t result_hash(const CoarsenResult& result);

struct BenchConfig {
  std::vector<std::size_t> thread_counts{1, 2, 4, 8, 16};
  std::size_t repetitions = 5;
  double target_ratio = 0.5;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::size_t threads = 0;
  PhaseTimings median;
  double speedup = 1.0;
  double imbalance = 1.0;
  bool deterministic = true;
};

/// Times approximate_greedy_coarsen for every thread count and checks that
/// the coarsening is identical across all of them. Medians are taken per phase.
std::vector<BenchRow> scaling_sweep(const Graph& g, const BenchConfig& cfg);

/// threads,fitness_ms,sort_ms,merge_ms,total_ms,speedup,imbalance,deterministic
CsvTable bench_table(const std::vector<BenchRow>& rows);

}  // namespace sgc

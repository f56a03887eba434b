#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sgc/fitness.hpp"
#include "sgc/graph.hpp"
#include "sgc/partition.hpp"

namespace sgc {

struct AppliedMerge {
  NodeId u;
  NodeId v;
  double fitness;

  bool operator==(const AppliedMerge&) const = default;
};

/// Ordered record of the unions a coarsening performed.
class MergeLog {
 public:
  void record(NodeId u, NodeId v, double fitness);
  void record_skip() { ++skipped_; }

  const std::vector<AppliedMerge>& applied() const { return applied_; }
  std::size_t skipped() const { return skipped_; }
  /// Number of applied merges.
  std::size_t s() const { return applied_.size(); }
  /// Largest applied fitness; 0 for an empty log.
  double eps_max() const { return eps_max_; }

  bool operator==(const MergeLog&) const = default;

 private:
  std::vector<AppliedMerge> applied_;
  std::size_t skipped_ = 0;
  double eps_max_ = 0.0;
};

/// Worst-case eigenvalue drift s(s+1)/2 * eps_max for a sequence of s merges
/// each certified at the original graph's fitness eps_max.
double spectral_error_bound(const MergeLog& log);

struct CoarsenResult {
  Partition partition;
  Graph coarse;
  MergeLog log;
};

struct PhaseTimings {
  double fitness_ms = 0.0;
  double sort_ms = 0.0;
  double merge_ms = 0.0;
  double total_ms = 0.0;
  /// Fitness work per thread chunk, see FitnessStats::chunk_work.
  std::vector<std::uint64_t> thread_work;
};

/// Approximate greedy coarsening.
///
/// Fitness is computed once for every edge of `g` (in parallel over
/// `threads` contiguous edge chunks) and sorted. The sorted list is then
/// walked in order: an edge whose endpoints already share a supernode is
/// skipped, otherwise the two supernodes are united. The walk stops when
/// `target` supernodes remain. Fitness values are never refreshed.
///
/// Throws InvalidArgument if target is not in [1, n] or threads < 1, and
/// GraphError if `g` is disconnected or has a zero-degree node.
CoarsenResult approximate_greedy_coarsen(const Graph& g, std::size_t target, std::size_t threads,
                                         PhaseTimings* timings = nullptr);

/// Reference greedy coarsening that recomputes the fitness of every edge of
/// the current coarse graph before each merge and takes the minimum under the
/// (value, u, v) order. Cost O(m (n + n_c) (n - n_c)). The log records the
/// minimum member ids of the merged supernodes and the fitness measured on
/// the coarse graph at that step.
CoarsenResult explicit_greedy_coarsen(const Graph& g, std::size_t target);

/// "order,u,v,fitness" CSV of the applied merges.
void write_merge_log(std::ostream& out, const MergeLog& log);
/// Inverse of write_merge_log. Throws ParseError.
MergeLog read_merge_log(std::istream& in);

}  // namespace sgc

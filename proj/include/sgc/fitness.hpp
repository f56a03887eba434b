#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Merge fitness of an edge: the 1-norm distance between the degree-normalized
/// adjacency rows of its endpoints.
struct FitnessEntry {
  NodeId u;  ///< u < v
  NodeId v;
  double value;

  bool operator==(const FitnessEntry&) const = default;
};

/// One entry per proper edge, ascending by (value, u, v).
using FitnessList = std::vector<FitnessEntry>;

/// Half-open range of positions in the canonical proper-edge list.
struct EdgeChunk {
  std::size_t begin;
  std::size_t end;
};

/// Splits m edges into `parts` contiguous chunks whose sizes differ by at most
/// one. The split ignores degrees entirely.
std::vector<EdgeChunk> contiguous_chunks(std::size_t m, std::size_t parts);

/// ||w_u/d_u - w_v/d_v||_1 by a two-pointer walk over the sorted rows.
/// Terms are summed in ascending neighbor order, so the result is
/// bit-reproducible and symmetric in (u, v). Throws GraphError on a
/// zero-degree endpoint.
double edge_fitness(const Graph& g, NodeId u, NodeId v);

struct FitnessStats {
  double fitness_ms = 0.0;
  double sort_ms = 0.0;
  /// Per chunk: sum over its edges of structural_degree(u) + structural_degree(v).
  std::vector<std::uint64_t> chunk_work;
};

/// Fitness of every proper edge computed over `threads` contiguous chunks,
/// concatenated and sorted. The output does not depend on `threads`.
FitnessList all_fitness(const Graph& g, std::size_t threads, FitnessStats* stats = nullptr);

struct LemmaGap {
  /// ||w_u/d_u - (w_u + w_v)/(d_u + d_v)||_1
  double merged_distance;
  /// edge_fitness(u, v) / (d_u/d_v + 1)
  double bound;
};

/// Distance from node u to the supernode {u, v}, next to the bound it obeys.
LemmaGap merged_node_lemma_gap(const Graph& g, NodeId u, NodeId v);

}  // namespace sgc

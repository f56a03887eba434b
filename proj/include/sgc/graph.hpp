#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sgc {

using NodeId = std::uint32_t;

struct WeightedEdge {
  NodeId u;
  NodeId v;
  double weight;

  bool operator==(const WeightedEdge&) const = default;
};

/// Immutable weighted undirected graph in compressed sparse row form.
///
/// Every undirected edge {u, v} with u != v is stored in both rows; a
/// self-loop {v, v} is stored once in row v. Rows are sorted by neighbor id
/// and hold no duplicates or zero weights. The weighted degree of v is the
/// row sum of the weight matrix, so a self-loop contributes its weight once.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Repeated (u, v) pairs, in either
  /// orientation, are merged by summing their weights.
  /// Throws InvalidArgument on out-of-range ids or non-positive weights.
  static Graph from_edges(std::size_t n, std::span<const WeightedEdge> edges);

  std::size_t num_nodes() const { return degrees_.size(); }
  /// Undirected edge count, self-loops included.
  std::size_t num_edges() const { return num_edges_; }
  std::size_t num_self_loops() const { return num_self_loops_; }
  bool has_self_loops() const { return num_self_loops_ > 0; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const double> weights(NodeId v) const {
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  double degree(NodeId v) const { return degrees_[v]; }
  std::span<const double> degrees() const { return degrees_; }
  /// Neighbor count; a self-loop counts once.
  std::size_t structural_degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Weight of {u, v}, or 0 when absent.
  double weight(NodeId u, NodeId v) const;

  /// Canonical edge list: every stored pair with u <= v, ascending (u, v).
  std::vector<WeightedEdge> edges() const;
  /// Edges with u < v in canonical order; self-loops excluded.
  std::vector<std::pair<NodeId, NodeId>> proper_edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
  std::vector<double> degrees_;
  std::size_t num_edges_ = 0;
  std::size_t num_self_loops_ = 0;
};

struct ValidationReport {
  bool connected = false;
  std::size_t components = 0;
  std::vector<NodeId> isolated;

  bool ok() const { return connected && isolated.empty(); }
  std::string message() const;
};

/// Connectivity (breadth-first traversal) and zero-degree check.
ValidationReport validate(const Graph& g);

/// Throws GraphError carrying the report message unless validate(g).ok().
void require_valid(const Graph& g);

}  // namespace sgc

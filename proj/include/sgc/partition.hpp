#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

/// Union-find forest mapping original nodes to supernodes.
class Partition {
 public:
  Partition() = default;
  /// Identity partition: every node is its own supernode.
  explicit Partition(std::size_t n);

  /// Groups nodes that share a label. Labels are arbitrary non-negative ids.
  static Partition from_labels(std::span<const std::int64_t> labels);

  std::size_t num_nodes() const { return parent_.size(); }
  std::size_t live() const { return live_; }

  /// Root of v's supernode, with path halving.
  NodeId find(NodeId v);
  /// Root of v's supernode without touching the forest.
  NodeId root(NodeId v) const;

  /// Union by size; equal sizes keep the smaller root id.
  /// Returns false when u and v already shared a supernode.
  bool unite(NodeId u, NodeId v);

  /// Number of original nodes in v's supernode.
  std::size_t supernode_size(NodeId v) const { return size_[root(v)]; }

  /// Dense supernode id for every node. Supernodes are numbered by ascending
  /// minimum member id, independent of the order of unions.
  std::vector<NodeId> labels() const;

  bool operator==(const Partition& other) const { return labels() == other.labels(); }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::size_t> size_;
  std::size_t live_ = 0;
};

/// Coarse graph W_c = P W P^T, with P the supernode membership indicator.
///
/// Off-diagonal weights are sums of member-to-member weights. The self-loop
/// of supernode c carries the full internal weight: each internal edge
/// contributes twice and each internal self-loop once.
Graph contract(const Graph& g, const Partition& part);

/// Same, with precomputed dense labels in [0, num_supernodes).
Graph contract(const Graph& g, std::span<const NodeId> labels, std::size_t num_supernodes);

/// Number of original nodes per dense supernode label.
std::vector<std::size_t> label_sizes(std::span<const NodeId> labels, std::size_t num_supernodes);

/// Sorted sparse real vector.
struct SparseVec {
  std::vector<std::pair<NodeId, double>> entries;

  /// Row v of the weight matrix scaled by 1/d_v.
  static SparseVec normalized_row(const Graph& g, NodeId v);
  /// alpha * a + beta * b, dropping exact zeros.
  static SparseVec combine(double alpha, const SparseVec& a, double beta, const SparseVec& b);

  double l1_norm() const;
};

double l1_distance(const SparseVec& a, const SparseVec& b);

}  // namespace sgc

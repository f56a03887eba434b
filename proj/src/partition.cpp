#include "sgc/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "sgc/error.hpp"

namespace sgc {

Partition::Partition(std::size_t n) : parent_(n), size_(n, 1), live_(n) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

Partition Partition::from_labels(std::span<const std::int64_t> labels) {
  Partition part(labels.size());
  std::unordered_map<std::int64_t, NodeId> first;
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0) throw InvalidArgument("negative supernode label");
    const auto [it, inserted] = first.emplace(labels[v], v);
    if (!inserted) part.unite(it->second, v);
  }
  return part;
}

NodeId Partition::find(NodeId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

NodeId Partition::root(NodeId v) const {
  while (parent_[v] != v) v = parent_[v];
  return v;
}

bool Partition::unite(NodeId u, NodeId v) {
  NodeId a = find(u);
  NodeId b = find(v);
  if (a == b) return false;
  if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --live_;
  return true;
}

std::vector<NodeId> Partition::labels() const {
  constexpr NodeId kUnset = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> by_root(num_nodes(), kUnset);
  std::vector<NodeId> out(num_nodes());
  NodeId next = 0;
  // Scanning in id order meets each supernode first at its minimum member.
  for (NodeId v = 0; v < num_nodes(); ++v) {
    const NodeId r = root(v);
    if (by_root[r] == kUnset) by_root[r] = next++;
    out[v] = by_root[r];
  }
  return out;
}

std::vector<std::size_t> label_sizes(std::span<const NodeId> labels, std::size_t num_supernodes) {
  std::vector<std::size_t> sizes(num_supernodes, 0);
  for (const NodeId c : labels) ++sizes[c];
  return sizes;
}

Graph contract(const Graph& g, const Partition& part) {
  if (part.num_nodes() != g.num_nodes())
    throw InvalidArgument("partition covers " + std::to_string(part.num_nodes()) + " nodes, graph has " +
                          std::to_string(g.num_nodes()));
  const auto labels = part.labels();
  return contract(g, labels, part.live());
}

Graph contract(const Graph& g, std::span<const NodeId> labels, std::size_t num_supernodes) {
  if (labels.size() != g.num_nodes()) throw InvalidArgument("label count does not match graph order");
  std::vector<WeightedEdge> coarse;
  coarse.reserve(g.num_edges());
  // Keeping entries with c(u) <= c(v) visits each crossing edge once, and
  // every internal edge twice (once per direction), which is P W P^T.
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const NodeId cu = labels[u];
    if (cu >= num_supernodes) throw InvalidArgument("supernode label out of range");
    const auto row = g.neighbors(u);
    const auto w = g.weights(u);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const NodeId cv = labels[row[k]];
      if (cu <= cv) coarse.push_back({cu, cv, w[k]});
    }
  }
  return Graph::from_edges(num_supernodes, coarse);
}

SparseVec SparseVec::normalized_row(const Graph& g, NodeId v) {
  SparseVec out;
  const auto row = g.neighbors(v);
  const auto w = g.weights(v);
  const double d = g.degree(v);
  out.entries.reserve(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) out.entries.emplace_back(row[k], w[k] / d);
  return out;
}

SparseVec SparseVec::combine(double alpha, const SparseVec& a, double beta, const SparseVec& b) {
  SparseVec out;
  std::size_t i = 0, j = 0;
  auto push = [&](NodeId idx, double value) {
    if (value != 0.0) out.entries.emplace_back(idx, value);
  };
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() || (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      push(a.entries[i].first, alpha * a.entries[i].second);
      ++i;
    } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
      push(b.entries[j].first, beta * b.entries[j].second);
      ++j;
    } else {
      push(a.entries[i].first, alpha * a.entries[i].second + beta * b.entries[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

double SparseVec::l1_norm() const {
  double s = 0.0;
  for (const auto& [idx, value] : entries) s += std::abs(value);
  return s;
}

double l1_distance(const SparseVec& a, const SparseVec& b) { return SparseVec::combine(1.0, a, -1.0, b).l1_norm(); }

}  // namespace sgc

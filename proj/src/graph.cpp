#include "sgc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "sgc/error.hpp"

namespace sgc {

Graph Graph::from_edges(std::size_t n, std::span<const WeightedEdge> edges) {
  std::vector<WeightedEdge> entries;
  entries.reserve(2 * edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.u << ", " << e.v << ") out of range for " << n << " nodes";
      throw InvalidArgument(msg.str());
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      std::ostringstream msg;
      msg << "edge (" << e.u << ", " << e.v << ") has non-positive weight " << e.weight;
      throw InvalidArgument(msg.str());
    }
    entries.push_back(e);
    if (e.u != e.v) entries.push_back({e.v, e.u, e.weight});
  }
  // Stable, so that duplicates accumulate in input order.
  std::stable_sort(entries.begin(), entries.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.degrees_.assign(n, 0.0);
  g.targets_.reserve(entries.size());
  g.weights_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    const NodeId u = entries[i].u;
    const NodeId v = entries[i].v;
    double w = 0.0;
    for (; i < entries.size() && entries[i].u == u && entries[i].v == v; ++i) w += entries[i].weight;
    g.targets_.push_back(v);
    g.weights_.push_back(w);
    ++g.offsets_[u + 1];
    if (u == v) {
      ++g.num_self_loops_;
      ++g.num_edges_;
    } else if (u < v) {
      ++g.num_edges_;
    }
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  for (std::size_t v = 0; v < n; ++v) {
    double d = 0.0;
    for (std::size_t k = g.offsets_[v]; k < g.offsets_[v + 1]; ++k) d += g.weights_[k];
    g.degrees_[v] = d;
  }
  return g;
}

double Graph::weight(NodeId u, NodeId v) const {
  const auto row = neighbors(u);
  const auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return 0.0;
  return weights(u)[static_cast<std::size_t>(it - row.begin())];
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    const auto row = neighbors(u);
    const auto w = weights(u);
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] >= u) out.push_back({u, row[k], w[k]});
  }
  return out;
}

std::vector<std::pair<NodeId, NodeId>> Graph::proper_edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(num_edges_ - num_self_loops_);
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (const NodeId v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

std::string ValidationReport::message() const {
  if (ok()) return "ok";
  std::ostringstream msg;
  if (!connected) msg << "graph is not connected (" << components << " components)";
  if (!isolated.empty()) {
    if (!connected) msg << "; ";
    msg << isolated.size() << " zero-degree node(s), first " << isolated.front();
  }
  return msg.str();
}

ValidationReport validate(const Graph& g) {
  ValidationReport report;
  const std::size_t n = g.num_nodes();
  for (NodeId v = 0; v < n; ++v)
    if (!(g.degree(v) > 0.0)) report.isolated.push_back(v);

  std::vector<bool> seen(n, false);
  std::queue<NodeId> frontier;
  for (NodeId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++report.components;
    seen[root] = true;
    frontier.push(root);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (const NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
  }
  report.connected = report.components == 1;
  return report;
}

void require_valid(const Graph& g) {
  const auto report = validate(g);
  if (!report.ok()) throw GraphError(report.message());
}

}  // namespace sgc

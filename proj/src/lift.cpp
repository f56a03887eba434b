#include "sgc/lift.hpp"

#include <string>

#include "sgc/error.hpp"

namespace sgc {

LiftedGraph lift(const Graph& coarse, const Partition& part, std::size_t n) {
  if (part.num_nodes() != n)
    throw InvalidArgument("partition covers " + std::to_string(part.num_nodes()) + " nodes, expected " +
                          std::to_string(n));
  if (part.live() != coarse.num_nodes())
    throw InvalidArgument("partition has " + std::to_string(part.live()) + " supernodes, coarse graph has " +
                          std::to_string(coarse.num_nodes()) + " nodes");

  const auto labels = part.labels();
  const auto sizes = label_sizes(labels, coarse.num_nodes());
  std::vector<std::vector<NodeId>> members(coarse.num_nodes());
  for (NodeId v = 0; v < n; ++v) members[labels[v]].push_back(v);

  std::vector<WeightedEdge> edges;
  for (NodeId cu = 0; cu < coarse.num_nodes(); ++cu) {
    const auto row = coarse.neighbors(cu);
    const auto w = coarse.weights(cu);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const NodeId cv = row[k];
      if (cv < cu) continue;
      const double value = w[k] / (static_cast<double>(sizes[cu]) * static_cast<double>(sizes[cv]));
      for (const NodeId x : members[cu])
        for (const NodeId y : members[cv])
          if (cu != cv || x <= y) edges.push_back({x, y, value});
    }
  }
  return {Graph::from_edges(n, edges), part};
}

}  // namespace sgc

#pragma once

#include <cstddef>

#include "sgc/graph.hpp"
#include "sgc/partition.hpp"

namespace sgc {

/// A coarse graph expanded back onto the original node set.
struct LiftedGraph {
  Graph graph;
  Partition partition;
};

/// Lift of a coarsening: the weight between original nodes u and v is
/// W_c(c_u, c_v) / (|c_u| |c_v|), applied to every pair including u == v.
/// In matrix form the lifted weights are Q^T W_c Q with Q(c, v) = 1/|c| for
/// v in c. Pairs of zero weight are not stored.
///
/// Throws InvalidArgument if `part` does not cover n nodes or its supernode
/// count differs from the order of `coarse`.
LiftedGraph lift(const Graph& coarse, const Partition& part, std::size_t n);

}  // namespace sgc

#include "sgc/fitness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "sgc/error.hpp"
#include "sgc/partition.hpp"

namespace sgc {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void require_positive_degree(const Graph& g, NodeId v) {
  if (!(g.degree(v) > 0.0)) throw GraphError("node " + std::to_string(v) + " has zero degree");
}

}  // namespace

std::vector<EdgeChunk> contiguous_chunks(std::size_t m, std::size_t parts) {
  if (parts < 1) throw InvalidArgument("thread count must be at least 1");
  std::vector<EdgeChunk> chunks(parts);
  const std::size_t base = m / parts;
  const std::size_t extra = m % parts;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t len = base + (i < extra ? 1 : 0);
    chunks[i] = {pos, pos + len};
    pos += len;
  }
  return chunks;
}

double edge_fitness(const Graph& g, NodeId u, NodeId v) {
  if (u >= g.num_nodes() || v >= g.num_nodes()) throw InvalidArgument("node id out of range");
  require_positive_degree(g, u);
  require_positive_degree(g, v);
  const auto ru = g.neighbors(u);
  const auto wu = g.weights(u);
  const auto rv = g.neighbors(v);
  const auto wv = g.weights(v);
  const double du = g.degree(u);
  const double dv = g.degree(v);

  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < ru.size() && j < rv.size()) {
    if (ru[i] < rv[j]) {
      sum += wu[i++] / du;
    } else if (rv[j] < ru[i]) {
      sum += wv[j++] / dv;
    } else {
      sum += std::abs(wu[i++] / du - wv[j++] / dv);
    }
  }
  for (; i < ru.size(); ++i) sum += wu[i] / du;
  for (; j < rv.size(); ++j) sum += wv[j] / dv;
  return sum;
}

FitnessList all_fitness(const Graph& g, std::size_t threads, FitnessStats* stats) {
  if (threads < 1) throw InvalidArgument("thread count must be at least 1");
  const auto edges = g.proper_edges();
  const auto chunks = contiguous_chunks(edges.size(), threads);
  FitnessList out(edges.size());
  std::vector<std::uint64_t> work(chunks.size(), 0);

  auto run_chunk = [&](std::size_t c) {
    std::uint64_t ops = 0;
    for (std::size_t k = chunks[c].begin; k < chunks[c].end; ++k) {
      const auto [u, v] = edges[k];
      out[k] = {u, v, edge_fitness(g, u, v)};
      ops += g.structural_degree(u) + g.structural_degree(v);
    }
    work[c] = ops;
  };

  const auto t0 = Clock::now();
  {
    std::vector<std::jthread> pool;
    pool.reserve(chunks.size());
    for (std::size_t c = 1; c < chunks.size(); ++c)
      if (chunks[c].begin != chunks[c].end) pool.emplace_back(run_chunk, c);
    run_chunk(0);
  }
  const double fitness_ms = elapsed_ms(t0);

  const auto t1 = Clock::now();
  std::sort(out.begin(), out.end(), [](const FitnessEntry& a, const FitnessEntry& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  if (stats != nullptr) {
    stats->fitness_ms = fitness_ms;
    stats->sort_ms = elapsed_ms(t1);
    stats->chunk_work = std::move(work);
  }
  return out;
}

LemmaGap merged_node_lemma_gap(const Graph& g, NodeId u, NodeId v) {
  const double eps = edge_fitness(g, u, v);
  const double du = g.degree(u);
  const double dv = g.degree(v);
  // (w_u + w_v)/(d_u + d_v) as a combination of the normalized rows.
  const auto nu = SparseVec::normalized_row(g, u);
  const auto nv = SparseVec::normalized_row(g, v);
  const auto merged = SparseVec::combine(du / (du + dv), nu, dv / (du + dv), nv);
  return {l1_distance(nu, merged), eps / (du / dv + 1.0)};
}

}  // namespace sgc

#include "sgc/bench.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "sgc/error.hpp"
#include "sgc/fitness.hpp"
#include "sgc/rng.hpp"

namespace sgc {
namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

class Fnv1a {
 public:
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (x >> (8 * i)) & 0xff;
      h_ *= 0x100000001b3ULL;
    }
  }
  void add(double x) { add(std::bit_cast<std::uint64_t>(x)); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

Graph gen_grid(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw InvalidArgument("grid dimensions must be at least 2");
  std::vector<WeightedEdge> edges;
  edges.reserve(2 * rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto id = static_cast<NodeId>(r * cols + c);
      if (c + 1 < cols) edges.push_back({id, id + 1, 1.0});
      if (r + 1 < rows) edges.push_back({id, static_cast<NodeId>(id + cols), 1.0});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph gen_powerlaw(std::size_t n, std::size_t attach, std::uint64_t seed) {
  if (attach < 1 || n <= attach) throw InvalidArgument("preferential attachment needs n > attach >= 1");
  SplitMix64 rng(seed);
  std::vector<WeightedEdge> edges;
  // Each node appears here once per incident edge endpoint, so a uniform
  // draw from this list is a degree-proportional draw over nodes.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * n * attach);
  for (NodeId a = 0; a <= attach; ++a) {
    for (NodeId b = a + 1; b <= attach; ++b) {
      edges.push_back({a, b, 1.0});
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(attach + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < attach) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (const NodeId t : targets) {
      edges.push_back({t, v, 1.0});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_erdos_renyi(std::size_t n, double p, double weight_lo, double weight_hi, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("Erdos-Renyi graph needs at least 2 nodes");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must be in (0, 1]");
  if (!(weight_lo > 0.0 && weight_hi >= weight_lo)) throw InvalidArgument("weights must be positive");
  SplitMix64 rng(seed);
  for (;;) {
    std::vector<WeightedEdge> edges;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (rng.uniform() < p) edges.push_back({u, v, rng.uniform(weight_lo, weight_hi)});
    auto g = Graph::from_edges(n, edges);
    if (validate(g).ok()) return g;
  }
}

Graph permute_nodes(const Graph& g, std::uint64_t seed) {
  std::vector<NodeId> perm(g.num_nodes());
  std::iota(perm.begin(), perm.end(), NodeId{0});
  SplitMix64 rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  auto edges = g.edges();
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  return Graph::from_edges(g.num_nodes(), edges);
}

std::uint64_t sum_squared_degrees(const Graph& g) {
  std::uint64_t s = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const std::uint64_t d = g.structural_degree(v);
    s += d * d;
  }
  return s;
}

double second_moment(const Graph& g) {
  if (g.num_nodes() == 0) return 0.0;
  return static_cast<double>(sum_squared_degrees(g)) / static_cast<double>(g.num_nodes());
}

std::vector<std::uint64_t> chunk_work(const Graph& g, std::size_t threads) {
  const auto edges = g.proper_edges();
  const auto chunks = contiguous_chunks(edges.size(), threads);
  std::vector<std::uint64_t> work(chunks.size(), 0);
  for (std::size_t c = 0; c < chunks.size(); ++c)
    for (std::size_t k = chunks[c].begin; k < chunks[c].end; ++k)
      work[c] += g.structural_degree(edges[k].first) + g.structural_degree(edges[k].second);
  return work;
}

double imbalance(const std::vector<std::uint64_t>& work) {
  if (work.empty()) return 1.0;
  const std::uint64_t total = std::accumulate(work.begin(), work.end(), std::uint64_t{0});
  if (total == 0) return 1.0;
  const double mean = static_cast<double>(total) / static_cast<double>(work.size());
  return static_cast<double>(*std::max_element(work.begin(), work.end())) / mean;
}

double imbalance(const Graph& g, std::size_t threads) { return imbalance(chunk_work(g, threads)); }

std::size_t nodes_for_ratio(std::size_t n, double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) throw InvalidArgument("ratio must be in (0, 1]");
  // Absorb representation error so that e.g. 0.1 * 30 stays 3.
  const double scaled = ratio * static_cast<double>(n);
  const auto target = static_cast<std::size_t>(std::ceil(scaled - 1e-9 * scaled));
  return std::clamp<std::size_t>(target, 1, std::max<std::size_t>(n, 1));
}

std::uint64_t result_hash(const CoarsenResult& result) {
  Fnv1a h;
  for (const NodeId label : result.partition.labels()) h.add(std::uint64_t{label});
  for (const auto& m : result.log.applied()) {
    h.add(std::uint64_t{m.u});
    h.add(std::uint64_t{m.v});
    h.add(m.fitness);
  }
  h.add(std::uint64_t{result.log.skipped()});
  for (const auto& e : result.coarse.edges()) {
    h.add(std::uint64_t{e.u});
    h.add(std::uint64_t{e.v});
    h.add(e.weight);
  }
  return h.value();
}

std::vector<BenchRow> scaling_sweep(const Graph& g, const BenchConfig& cfg) {
  if (cfg.thread_counts.empty()) throw InvalidArgument("no thread counts given");
  if (cfg.repetitions < 1) throw InvalidArgument("repetitions must be at least 1");
  for (const auto p : cfg.thread_counts)
    if (p < 1) throw InvalidArgument("thread count must be at least 1");
  const std::size_t target = nodes_for_ratio(g.num_nodes(), cfg.target_ratio);

  std::vector<BenchRow> rows;
  std::uint64_t reference = 0;
  for (const std::size_t threads : cfg.thread_counts) {
    std::vector<double> fit, sort, merge, total;
    BenchRow row;
    row.threads = threads;
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
      PhaseTimings t;
      const auto result = approximate_greedy_coarsen(g, target, threads, &t);
      const auto hash = result_hash(result);
      if (rows.empty() && rep == 0) reference = hash;
      if (hash != reference) row.deterministic = false;
      fit.push_back(t.fitness_ms);
      sort.push_back(t.sort_ms);
      merge.push_back(t.merge_ms);
      total.push_back(t.total_ms);
      row.median.thread_work = std::move(t.thread_work);
    }
    row.median.fitness_ms = median(fit);
    row.median.sort_ms = median(sort);
    row.median.merge_ms = median(merge);
    row.median.total_ms = median(total);
    row.imbalance = imbalance(row.median.thread_work);
    const double first = rows.empty() ? row.median.total_ms : rows.front().median.total_ms;
    row.speedup = row.median.total_ms > 0.0 ? first / row.median.total_ms : 1.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

CsvTable bench_table(const std::vector<BenchRow>& rows) {
  CsvTable t{{"threads", "fitness_ms", "sort_ms", "merge_ms", "total_ms", "speedup", "imbalance", "deterministic"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.threads), format_real(r.median.fitness_ms), format_real(r.median.sort_ms),
                      format_real(r.median.merge_ms), format_real(r.median.total_ms), format_real(r.speedup),
                      format_real(r.imbalance), r.deterministic ? "true" : "false"});
  return t;
}

}  // namespace sgc

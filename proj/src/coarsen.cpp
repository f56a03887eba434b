#include "sgc/coarsen.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include "sgc/error.hpp"
#include "sgc/io.hpp"

namespace sgc {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void check_request(const Graph& g, std::size_t target) {
  if (target < 1 || target > g.num_nodes())
    throw InvalidArgument("target node count " + std::to_string(target) + " outside [1, " +
                          std::to_string(g.num_nodes()) + "]");
  require_valid(g);
}

}  // namespace

void MergeLog::record(NodeId u, NodeId v, double fitness) {
  applied_.push_back({u, v, fitness});
  eps_max_ = std::max(eps_max_, fitness);
}

double spectral_error_bound(const MergeLog& log) {
  const auto s = static_cast<double>(log.s());
  return s * (s + 1.0) / 2.0 * log.eps_max();
}

CoarsenResult approximate_greedy_coarsen(const Graph& g, std::size_t target, std::size_t threads,
                                         PhaseTimings* timings) {
  if (threads < 1) throw InvalidArgument("thread count must be at least 1");
  check_request(g, target);

  const auto start = Clock::now();
  FitnessStats stats;
  const auto fitness = all_fitness(g, threads, &stats);

  const auto merge_start = Clock::now();
  CoarsenResult result{Partition(g.num_nodes()), {}, {}};
  auto& part = result.partition;
  for (std::size_t k = 0; k < fitness.size() && part.live() > target; ++k) {
    const auto& e = fitness[k];
    if (part.unite(e.u, e.v))
      result.log.record(e.u, e.v, e.value);
    else
      result.log.record_skip();
  }
  // A spanning forest of a connected graph always reaches one supernode.
  if (part.live() != target) throw GraphError("edge list exhausted before reaching the target");
  result.coarse = contract(g, part);

  if (timings != nullptr) {
    timings->fitness_ms = stats.fitness_ms;
    timings->sort_ms = stats.sort_ms;
    timings->merge_ms = elapsed_ms(merge_start);
    timings->total_ms = elapsed_ms(start);
    timings->thread_work = std::move(stats.chunk_work);
  }
  return result;
}

CoarsenResult explicit_greedy_coarsen(const Graph& g, std::size_t target) {
  check_request(g, target);
  CoarsenResult result{Partition(g.num_nodes()), g, {}};
  // Coarse node i is the supernode with the i-th smallest minimum member.
  std::vector<NodeId> representative(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) representative[v] = v;

  while (result.partition.live() > target) {
    const auto fitness = all_fitness(result.coarse, 1);
    if (fitness.empty()) throw GraphError("no edge left to merge");
    const auto best = fitness.front();
    const NodeId ra = representative[best.u];
    const NodeId rb = representative[best.v];
    result.partition.unite(ra, rb);
    result.log.record(ra, rb, best.value);

    // Merge best.v into best.u; the ordering by minimum member is preserved.
    const std::size_t order = result.coarse.num_nodes();
    std::vector<NodeId> step(order);
    for (NodeId c = 0, next = 0; c < order; ++c) step[c] = c == best.v ? step[best.u] : next++;
    result.coarse = contract(result.coarse, step, order - 1);
    representative.erase(representative.begin() + best.v);
  }
  return result;
}

void write_merge_log(std::ostream& out, const MergeLog& log) {
  CsvTable table{{"order", "u", "v", "fitness"}, {}};
  table.rows.reserve(log.s());
  std::size_t order = 0;
  for (const auto& m : log.applied())
    table.rows.push_back({std::to_string(order++), std::to_string(m.u), std::to_string(m.v), format_real(m.fitness)});
  write_csv(out, table);
}

MergeLog read_merge_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "order,u,v,fitness") throw ParseError("merge log header mismatch");
  MergeLog log;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::size_t order = 0;
    NodeId u = 0, v = 0;
    std::string fitness;
    std::string extra;
    if (!(fields >> order >> u >> v >> fitness) || (fields >> extra) || order != log.s())
      throw ParseError("merge log line " + std::to_string(line_no) + " is malformed");
    try {
      std::size_t used = 0;
      const double value = std::stod(fitness, &used);
      if (used != fitness.size() || value < 0.0) throw ParseError("");
      log.record(u, v, value);
    } catch (const std::exception&) {
      throw ParseError("merge log line " + std::to_string(line_no) + " has an invalid fitness");
    }
  }
  return log;
}

}  // namespace sgc

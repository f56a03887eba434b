// Acceptance suite: one line per criterion, nonzero exit if any mandatory
// check fails. SKIP marks a hardware-conditional check that could not run.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sgc/bench.hpp"
#include "sgc/coarsen.hpp"
#include "sgc/fitness.hpp"
#include "sgc/lift.hpp"
#include "sgc/rng.hpp"
#include "sgc/spectral.hpp"

namespace {

using namespace sgc;

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status;
  std::string detail;
};

constexpr std::size_t kFamilySize = 200;

/// Member i of the seeded random family: connected G(n, 0.4), n in [4, 14],
/// weights uniform in [0.5, 1.5).
Graph family_graph(std::size_t i) {
  SplitMix64 rng(0x5eed0000 + i);
  const std::size_t n = 4 + rng.below(11);
  return gen_erdos_renyi(n, 0.4, 0.5, 1.5, rng());
}

std::vector<double> lift_eigenvalues(const Graph& coarse, const Partition& part, std::size_t n) {
  return eigvals_sym(normalized_laplacian(lift(coarse, part, n).graph));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome single_merge_bound() {
  std::size_t checks = 0, failures = 0;
  double worst_slack = -1e300;
  for (std::size_t i = 0; i < kFamilySize; ++i) {
    const auto g = family_graph(i);
    const auto base = eigvals_sym(normalized_laplacian(g));
    for (const auto& [u, v] : g.proper_edges()) {
      Partition part(g.num_nodes());
      part.unite(u, v);
      const double gap = eigenvalue_gap(base, lift_eigenvalues(contract(g, part), part, g.num_nodes()));
      const double eps = edge_fitness(g, u, v);
      worst_slack = std::max(worst_slack, gap - eps);
      ++checks;
      if (gap > eps + 1e-9) ++failures;
    }
  }
  return {failures == 0 ? Status::Pass : Status::Fail,
          std::to_string(checks) + " merges over " + std::to_string(kFamilySize) + " graphs, " +
              std::to_string(failures) + " violations, max(gap - fitness) = " + fmt(worst_slack)};
}

Outcome multi_merge_bound() {
  std::size_t checks = 0, failures = 0;
  double worst_slack = -1e300;
  for (std::size_t i = 0; i < kFamilySize; ++i) {
    const auto g = family_graph(i);
    const std::size_t n = g.num_nodes();
    const auto base = eigvals_sym(normalized_laplacian(g));
    for (std::size_t target = n - 1; target >= 2; --target) {
      const auto r = approximate_greedy_coarsen(g, target, 1);
      const double gap = eigenvalue_gap(base, lift_eigenvalues(r.coarse, r.partition, n));
      const double bound = spectral_error_bound(r.log);
      worst_slack = std::max(worst_slack, gap - bound);
      ++checks;
      if (gap > bound + 1e-9) ++failures;
    }
  }
  return {failures == 0 ? Status::Pass : Status::Fail,
          std::to_string(checks) + " coarsenings, " + std::to_string(failures) +
              " violations, max(gap - bound) = " + fmt(worst_slack)};
}

Outcome lemma_property() {
  SplitMix64 rng(0x1e33a);
  constexpr std::size_t kGraphs = 1000;
  std::size_t checks = 0, failures = 0;
  double worst = -1e300;
  for (std::size_t i = 0; i < kGraphs; ++i) {
    const std::size_t n = 2 + rng.below(11);
    const double p = rng.uniform(0.2, 0.9);
    const auto g = gen_erdos_renyi(n, p, 0.05, 5.0, rng());
    for (const auto& [u, v] : g.proper_edges()) {
      for (const auto& gap : {merged_node_lemma_gap(g, u, v), merged_node_lemma_gap(g, v, u)}) {
        ++checks;
        worst = std::max(worst, gap.merged_distance - gap.bound);
        if (gap.merged_distance > gap.bound + 1e-12) ++failures;
      }
    }
  }
  return {failures == 0 ? Status::Pass : Status::Fail,
          std::to_string(checks) + " oriented edges over " + std::to_string(kGraphs) + " graphs, " +
              std::to_string(failures) + " violations, max(left - right) = " + fmt(worst)};
}

Outcome exact_at_zero_fitness() {
  const auto c4 = Graph::from_edges(4, std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  Partition part(4);
  part.unite(0, 2);
  const auto lifted = lift(contract(c4, part), part, 4).graph;
  const bool same = lifted == c4;
  const double gap =
      eigenvalue_gap(eigvals_sym(normalized_laplacian(c4)), eigvals_sym(normalized_laplacian(lifted)));
  return {same && gap <= 1e-9 ? Status::Pass : Status::Fail,
          std::string("lift == C4: ") + (same ? "yes" : "no") + ", fitness " + fmt(edge_fitness(c4, 0, 2)) +
              ", gap " + fmt(gap)};
}

Outcome oracle_equivalence() {
  std::size_t agree = 0;
  for (std::size_t i = 0; i < kFamilySize; ++i) {
    const auto g = family_graph(i);
    const auto a = approximate_greedy_coarsen(g, g.num_nodes() - 1, 2);
    const auto e = explicit_greedy_coarsen(g, g.num_nodes() - 1);
    if (a.partition == e.partition) ++agree;
  }
  return {agree == kFamilySize ? Status::Pass : Status::Fail,
          std::to_string(agree) + "/" + std::to_string(kFamilySize) + " identical partitions"};
}

Outcome eigenvalue_containment() {
  std::size_t checks = 0, misses = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < kFamilySize; ++i) {
    const auto g = family_graph(i);
    const std::size_t n = g.num_nodes();
    for (std::size_t target = n - 1; target >= 1; --target) {
      const auto r = approximate_greedy_coarsen(g, target, 1);
      const auto coarse = eigvals_sym(normalized_laplacian(r.coarse));
      const auto lifted = lift_eigenvalues(r.coarse, r.partition, n);
      for (const double mu : coarse) {
        double best = 1e300;
        for (const double lam : lifted) best = std::min(best, std::abs(lam - mu));
        worst = std::max(worst, best);
        ++checks;
        if (best > 1e-6) ++misses;
      }
    }
  }
  return {misses == 0 ? Status::Pass : Status::Fail,
          std::to_string(checks) + " coarse eigenvalues, " + std::to_string(misses) +
              " unmatched, worst distance " + fmt(worst)};
}

Outcome eigensolver_correctness() {
  std::vector<std::string> problems;
  const auto p3 = Graph::from_edges(3, std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}});
  const auto s3 = eigvals_sym(normalized_laplacian(p3));
  const double p3_err = eigenvalue_gap(s3, std::vector<double>{0.0, 1.0, 2.0});
  if (p3_err > 1e-9) problems.push_back("P3 error " + fmt(p3_err));

  SplitMix64 rng(0x7ac0b1);
  double worst_rel = 0.0;
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = 1 + (i * 199) / 49;  // 1 .. 200
    DenseSymMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = rng.uniform(-1.0, 1.0);
    const auto s = eig_sym(m);
    double err = 0.0;
    std::vector<double> scaled(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) scaled[k] = s.vectors(k, r) * s.eigenvalues[k];
      for (std::size_t c = 0; c < n; ++c) {
        double x = 0.0;
        for (std::size_t k = 0; k < n; ++k) x += scaled[k] * s.vectors(k, c);
        err += (x - m(r, c)) * (x - m(r, c));
      }
    }
    worst_rel = std::max(worst_rel, std::sqrt(err) / m.frobenius_norm());
  }
  if (worst_rel > 1e-8) problems.push_back("reconstruction " + fmt(worst_rel));

  double lo = 1e300, hi = -1e300;
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < kFamilySize; ++i) graphs.push_back(family_graph(i));
  graphs.push_back(gen_grid(12, 12));
  graphs.push_back(gen_powerlaw(150, 3, 5));
  for (std::size_t i = 0; i < 20; ++i) {
    const auto g = family_graph(i);
    graphs.push_back(lift(approximate_greedy_coarsen(g, 2, 1).coarse, approximate_greedy_coarsen(g, 2, 1).partition,
                          g.num_nodes())
                         .graph);
  }
  for (const auto& g : graphs) {
    const auto values = eigvals_sym(normalized_laplacian(g));
    lo = std::min(lo, values.front());
    hi = std::max(hi, values.back());
  }
  if (lo < -1e-10 || hi > 2.0 + 1e-10) problems.push_back("Laplacian spectrum outside [0, 2]");

  std::string detail = "P3 error " + fmt(p3_err) + ", worst relative reconstruction " + fmt(worst_rel) +
                       " (50 matrices, n <= 200), Laplacian range [" + fmt(lo) + ", " + fmt(hi) + "] over " +
                       std::to_string(graphs.size()) + " graphs";
  return {problems.empty() ? Status::Pass : Status::Fail, detail};
}

bool same_fitness(const FitnessList& a, const FitnessList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].u != b[i].u || a[i].v != b[i].v ||
        std::bit_cast<std::uint64_t>(a[i].value) != std::bit_cast<std::uint64_t>(b[i].value))
      return false;
  }
  return true;
}

Outcome determinism() {
  const std::vector<std::pair<std::string, Graph>> graphs{{"grid(64,64)", gen_grid(64, 64)},
                                                          {"powerlaw(2000,4,7)", gen_powerlaw(2000, 4, 7)}};
  std::size_t mismatches = 0;
  std::ostringstream detail;
  for (const auto& [name, g] : graphs) {
    const auto target = nodes_for_ratio(g.num_nodes(), 0.5);
    const auto fit1 = all_fitness(g, 1);
    const auto res1 = approximate_greedy_coarsen(g, target, 1);
    for (const std::size_t p : {2u, 4u, 8u}) {
      const auto res = approximate_greedy_coarsen(g, target, p);
      const bool ok = same_fitness(fit1, all_fitness(g, p)) && res.partition == res1.partition &&
                      res.log == res1.log && res.coarse == res1.coarse && result_hash(res) == result_hash(res1);
      if (!ok) ++mismatches;
    }
    detail << name << " hash " << std::hex << result_hash(res1) << std::dec << "; ";
  }
  detail << mismatches << " mismatches across threads {1,2,4,8}";
  return {mismatches == 0 ? Status::Pass : Status::Fail, detail.str()};
}

Outcome scaling_contrast() {
  const auto grid = gen_grid(256, 256);
  const double grid_imb = imbalance(grid, 32);
  const double pl_imb = imbalance(gen_powerlaw(4096, 8, 7), 32);
  const bool imbalance_ok = grid_imb < pl_imb;

  BenchConfig cfg;
  cfg.thread_counts = {1, 8};
  cfg.repetitions = 5;
  cfg.target_ratio = 0.5;
  const auto rows = scaling_sweep(grid, cfg);
  const double speedup = rows[0].median.fitness_ms / rows[1].median.fitness_ms;
  const unsigned cores = std::thread::hardware_concurrency();

  std::string detail = "imbalance(grid,32) = " + fmt(grid_imb) + " vs imbalance(powerlaw,32) = " + fmt(pl_imb) +
                       "; fitness speedup at 8 threads = " + fmt(speedup) + " on " + std::to_string(cores) +
                       " hardware threads";
  if (!imbalance_ok) return {Status::Fail, detail};
  if (cores < 8) return {Status::Skip, detail + " (speedup check needs >= 8 cores; imbalance check passed)"};
  return {speedup >= 3.0 ? Status::Pass : Status::Fail, detail};
}

double median(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const std::size_t m = x.size() / 2;
  return x.size() % 2 ? x[m] : 0.5 * (x[m - 1] + x[m]);
}

Outcome spectral_drift() {
  constexpr std::size_t kEigen = 20;
  const auto base_grid = gen_grid(32, 32);
  const std::size_t n = base_grid.num_nodes();
  // Relabeling nodes leaves the spectrum unchanged, so one decomposition serves every seed.
  const auto original = eigvals_sym(normalized_laplacian(base_grid));
  const std::vector<double> ratios{0.5, 0.25, 0.125};
  std::vector<std::vector<double>> gaps(ratios.size());
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    // The seed relabels the nodes, which changes how fitness ties are broken.
    const auto g = permute_nodes(base_grid, seed);
    for (std::size_t r = 0; r < ratios.size(); ++r) {
      const auto res = approximate_greedy_coarsen(g, nodes_for_ratio(n, ratios[r]), 1);
      const auto lifted = lift_eigenvalues(res.coarse, res.partition, n);
      double gap = 0.0;
      for (std::size_t i = 1; i <= kEigen; ++i) gap = std::max(gap, std::abs(original[i] - lifted[i]));
      gaps[r].push_back(gap);
    }
  }
  std::vector<double> medians;
  for (const auto& g : gaps) medians.push_back(median(g));
  const bool monotone = std::is_sorted(medians.begin(), medians.end());
  std::string detail = "median gap over eigenvalues 1..20:";
  for (std::size_t r = 0; r < ratios.size(); ++r) detail += " ratio " + fmt(ratios[r]) + " -> " + fmt(medians[r]);
  return {monotone ? Status::Pass : Status::Fail, detail};
}

Outcome work_identity() {
  SplitMix64 rng(0x3011);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng.below(199);
    // Edge probability kept above the connectivity threshold so the
    // connected-graph generator does not spin on redraws.
    const double p_min = std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
    const Graph g = i % 4 == 3 ? gen_powerlaw(n + 4, 1 + rng.below(3), rng())
                               : gen_erdos_renyi(n, rng.uniform(p_min, std::max(p_min, 0.6)), 1.0, 1.0, rng());
    std::uint64_t edge_sum = 0;
    for (const auto& [u, v] : g.proper_edges()) edge_sum += g.structural_degree(u) + g.structural_degree(v);
    const double from_moment = static_cast<double>(g.num_nodes()) * second_moment(g);
    if (edge_sum != sum_squared_degrees(g) || std::llround(from_moment) != static_cast<long long>(edge_sum))
      ++mismatches;
  }
  return {mismatches == 0 ? Status::Pass : Status::Fail,
          "100 graphs, " + std::to_string(mismatches) + " mismatches"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 means no runtime target
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "single-merge spectral bound", single_merge_bound, 60.0},
      {2, "multi-merge spectral bound", multi_merge_bound, 120.0},
      {3, "merged-node lemma", lemma_property, 0.0},
      {4, "exactness at zero fitness", exact_at_zero_fitness, 0.0},
      {5, "greedy oracle equivalence", oracle_equivalence, 0.0},
      {6, "eigenvalue containment", eigenvalue_containment, 0.0},
      {7, "eigensolver correctness", eigensolver_correctness, 0.0},
      {8, "thread determinism", determinism, 0.0},
      {9, "scaling contrast", scaling_contrast, 0.0},
      {10, "spectral drift trend", spectral_drift, 0.0},
      {11, "work identity", work_identity, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s && out.status == Status::Pass) {
      out.status = Status::Fail;
      out.detail += "; runtime target " + fmt(c.time_limit_s) + " s exceeded";
    }
    const char* tag = out.status == Status::Pass ? "PASS" : out.status == Status::Skip ? "SKIP" : "FAIL";
    if (out.status == Status::Fail) ++failures;
    std::printf("%s criterion %d (%s) [%.1fs]: %s\n", tag, c.id, c.name, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

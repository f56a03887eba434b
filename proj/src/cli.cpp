#include "sgc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sgc/bench.hpp"
#include "sgc/coarsen.hpp"
#include "sgc/error.hpp"
#include "sgc/io.hpp"
#include "sgc/spectral.hpp"

namespace sgc::cli {
namespace {

namespace fs = std::filesystem;

struct GraphSource {
  std::string path;
  std::string format;
};

void add_source(CLI::App* cmd, GraphSource& src, bool required = true) {
  auto* input = cmd->add_option("input", src.path, "graph file");
  auto* format = cmd->add_option("--format", src.format, "snap-edgelist | matrix-market | ply-ascii | weighted-edgelist")
                     ->check(CLI::IsMember({"snap-edgelist", "matrix-market", "ply-ascii", "weighted-edgelist"}));
  if (required) {
    input->required();
    format->required();
  }
}

LoadedGraph load(const GraphSource& src) {
  const auto format = parse_graph_format(src.format);
  if (!format) throw InvalidArgument("unknown format '" + src.format + "'");
  return load_graph_file(src.path, *format);
}

std::size_t default_k(std::size_t requested, bool given, std::size_t n) {
  const std::size_t limit = n > 0 ? n - 1 : 0;
  if (!given) return std::min<std::size_t>(requested, limit);
  if (requested < 1 || requested > limit)
    throw InvalidArgument("--k " + std::to_string(requested) + " outside [1, " + std::to_string(limit) + "]");
  return requested;
}

/// "RxC" or "powerlaw:n,attach,seed" style integer lists.
std::vector<std::uint64_t> parse_ints(const std::string& text, char sep, std::size_t count, const std::string& what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      if (item.empty() || item.front() == '-') throw std::invalid_argument(item);
      value = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed " + what + " '" + text + "'");
    }
    if (used != item.size()) throw InvalidArgument("malformed " + what + " '" + text + "'");
    out.push_back(value);
  }
  if (out.size() != count) throw InvalidArgument("malformed " + what + " '" + text + "'");
  return out;
}

Graph generate(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("generator spec must be grid:RxC or powerlaw:n,attach,seed");
  const auto kind = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);
  if (kind == "grid") {
    const auto dims = parse_ints(args, 'x', 2, "grid spec");
    return gen_grid(dims[0], dims[1]);
  }
  if (kind == "powerlaw") {
    const auto p = parse_ints(args, ',', 3, "powerlaw spec");
    return gen_powerlaw(p[0], p[1], p[2]);
  }
  throw InvalidArgument("unknown generator '" + kind + "'");
}

fs::path with_suffix(const std::string& prefix, const std::string& suffix) { return fs::path(prefix + suffix); }

// --- coarsen ---------------------------------------------------------------

struct CoarsenArgs {
  GraphSource src;
  std::optional<std::size_t> nodes;
  std::optional<double> ratio;
  std::size_t threads = 1;
  std::string algorithm = "approx";
  std::string out_prefix;
  bool id_map = false;
};

int cmd_coarsen(const CoarsenArgs& a, std::ostream& out) {
  if (a.nodes.has_value() == a.ratio.has_value()) throw InvalidArgument("give exactly one of --nodes and --ratio");
  if (a.threads < 1) throw InvalidArgument("--threads must be at least 1");
  if (a.ratio && !(*a.ratio > 0.0 && *a.ratio <= 1.0)) throw InvalidArgument("--ratio must be in (0, 1]");
  if (a.nodes && *a.nodes < 1) throw InvalidArgument("--nodes must be at least 1");

  const auto loaded = load(a.src);
  const Graph& g = loaded.graph;
  require_valid(g);
  const std::size_t n = g.num_nodes();
  const std::size_t target = a.ratio ? nodes_for_ratio(n, *a.ratio) : *a.nodes;
  if (target > n) throw InvalidArgument("--nodes " + std::to_string(target) + " exceeds n = " + std::to_string(n));

  const auto result =
      a.algorithm == "explicit" ? explicit_greedy_coarsen(g, target) : approximate_greedy_coarsen(g, target, a.threads);

  write_file(with_suffix(a.out_prefix, ".graph"), [&](std::ostream& s) { write_weighted_edgelist(s, result.coarse); });
  write_file(with_suffix(a.out_prefix, ".part"), [&](std::ostream& s) { write_partition(s, result.partition); });
  write_file(with_suffix(a.out_prefix, ".merges.csv"), [&](std::ostream& s) { write_merge_log(s, result.log); });
  if (a.id_map && !loaded.original_ids.empty()) {
    write_file(with_suffix(a.out_prefix, ".ids"), [&](std::ostream& s) {
      for (const auto id : loaded.original_ids) s << id << '\n';
    });
  }

  out << "n=" << n << " m=" << g.num_edges() << " n_c=" << result.partition.live() << " s=" << result.log.s()
      << " eps_max=" << format_real(result.log.eps_max()) << " bound=" << format_real(spectral_error_bound(result.log))
      << '\n';
  return kOk;
}

// --- spectrum / verify -----------------------------------------------------

struct SpectrumArgs {
  GraphSource src;
  std::size_t k = 50;
  bool k_given = false;
  std::string out;
  std::string vectors;
  std::string coords;
  std::size_t cap = kDefaultDenseCap;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const auto loaded = load(a.src);
  const Graph& g = loaded.graph;
  const std::size_t k = default_k(a.k, a.k_given, g.num_nodes());
  const auto spectrum = eig_sym(normalized_laplacian(g, a.cap));
  write_file(a.out, [&](std::ostream& s) { write_csv(s, spectrum_table(spectrum, k)); });
  if (!a.vectors.empty()) write_file(a.vectors, [&](std::ostream& s) { write_csv(s, eigenvector_table(spectrum, k)); });
  if (!a.coords.empty()) {
    if (loaded.coordinates.empty()) throw InvalidArgument("--coords needs a ply-ascii input");
    CsvTable t{{"node", "x", "y", "z"}, {}};
    for (std::size_t v = 0; v < loaded.coordinates.size(); ++v) {
      const auto& p = loaded.coordinates[v];
      t.rows.push_back({std::to_string(v), format_real(p[0]), format_real(p[1]), format_real(p[2])});
    }
    write_file(a.coords, [&](std::ostream& s) { write_csv(s, t); });
  }
  out << "n=" << g.num_nodes() << " k=" << k;
  if (spectrum.size() > 1) out << " fiedler=" << format_real(spectrum.eigenvalues[1]);
  out << '\n';
  return kOk;
}

struct VerifyArgs {
  GraphSource src;
  std::string part;
  std::size_t k = 50;
  bool k_given = false;
  std::string out_prefix;
  std::size_t cap = kDefaultDenseCap;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto loaded = load(a.src);
  const Graph& g = loaded.graph;
  const std::size_t k = default_k(a.k, a.k_given, g.num_nodes());
  if (g.num_nodes() > a.cap) throw InvalidArgument("graph order exceeds the dense spectral cap");

  std::ifstream part_in(a.part);
  if (!part_in) throw IoError("cannot open " + a.part);
  Partition part;
  try {
    part = read_partition(part_in, g.num_nodes());
  } catch (const ParseError& e) {
    throw InvalidArgument(std::string("malformed partition: ") + e.what());
  }

  std::string stem = a.part;
  if (stem.size() > 5 && stem.ends_with(".part")) stem.resize(stem.size() - 5);
  std::optional<MergeLog> log;
  if (std::ifstream merges(stem + ".merges.csv"); merges) log = read_merge_log(merges);

  const auto report = verify_partition(g, part, log ? &*log : nullptr, k, a.cap);
  write_file(with_suffix(a.out_prefix, ".eigenvalues.csv"),
           [&](std::ostream& s) { write_csv(s, eigenvalue_pair_table(report)); });
  write_file(with_suffix(a.out_prefix, ".alignment.csv"),
           [&](std::ostream& s) { write_csv(s, alignment_table(report.alignment)); });
  write_file(with_suffix(a.out_prefix, ".vectors.csv"),
           [&](std::ostream& s) { write_csv(s, eigenvector_table(report.lifted, k)); });

  out << "gap=" << format_real(report.gap) << " bound=" << (report.bound ? format_real(*report.bound) : "n/a")
      << " satisfied=" << (report.satisfied ? (*report.satisfied ? "true" : "false") : "n/a") << '\n';
  return kOk;
}

// --- bench / gen -----------------------------------------------------------

struct BenchArgs {
  GraphSource src;
  std::string gen;
  std::vector<std::size_t> threads{1, 2, 4, 8, 16};
  std::size_t repeat = 5;
  double ratio = 0.5;
  std::string out;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.src.path.empty() == a.gen.empty()) throw InvalidArgument("give exactly one of an input file and --gen");
  if (a.threads.empty()) throw InvalidArgument("--threads needs at least one count");
  for (const auto p : a.threads)
    if (p < 1) throw InvalidArgument("--threads entries must be at least 1");
  if (!std::is_sorted(a.threads.begin(), a.threads.end())) throw InvalidArgument("--threads must be ascending");
  if (a.repeat < 1) throw InvalidArgument("--repeat must be at least 1");
  if (!(a.ratio > 0.0 && a.ratio <= 1.0)) throw InvalidArgument("--ratio must be in (0, 1]");
  if (!a.gen.empty() && !a.src.format.empty()) throw InvalidArgument("--format applies to file inputs only");
  if (!a.src.path.empty() && a.src.format.empty()) throw InvalidArgument("--format is required with an input file");

  const Graph g = a.gen.empty() ? load(a.src).graph : generate(a.gen);
  require_valid(g);
  BenchConfig cfg;
  cfg.thread_counts = a.threads;
  cfg.repetitions = a.repeat;
  cfg.target_ratio = a.ratio;
  const auto rows = scaling_sweep(g, cfg);
  write_file(a.out, [&](std::ostream& s) { write_csv(s, bench_table(rows)); });
  const bool deterministic = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.deterministic; });
  out << "n=" << g.num_nodes() << " m=" << g.num_edges() << " second_moment=" << format_real(second_moment(g))
      << " rows=" << rows.size() << " deterministic=" << (deterministic ? "true" : "false") << '\n';
  return kOk;
}

struct GenArgs {
  std::string grid;
  std::string powerlaw;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.grid.empty() == a.powerlaw.empty()) throw InvalidArgument("give exactly one of --grid and --powerlaw");
  const Graph g = generate(a.grid.empty() ? "powerlaw:" + a.powerlaw : "grid:" + a.grid);
  write_file(a.out, [&](std::ostream& s) { write_weighted_edgelist(s, g); });
  out << "n=" << g.num_nodes() << " m=" << g.num_edges() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum-preserving graph coarsening", "sgc"};
  app.require_subcommand(1, 1);

  CoarsenArgs coarsen;
  auto* c = app.add_subcommand("coarsen", "coarsen a graph");
  add_source(c, coarsen.src);
  auto* nodes = c->add_option("--nodes", coarsen.nodes, "target node count");
  auto* ratio = c->add_option("--ratio", coarsen.ratio, "target fraction of nodes, n_c = ceil(r n)");
  nodes->excludes(ratio);
  c->add_option("--threads", coarsen.threads, "fitness-phase threads")->capture_default_str();
  c->add_option("--algorithm", coarsen.algorithm, "approx | explicit")
      ->check(CLI::IsMember({"approx", "explicit"}))
      ->capture_default_str();
  c->add_option("--out-prefix", coarsen.out_prefix, "output path prefix")->required();
  c->add_flag("--id-map", coarsen.id_map, "write <prefix>.ids for SNAP inputs");

  SpectrumArgs spectrum;
  auto* s = app.add_subcommand("spectrum", "normalized-Laplacian spectrum of a graph");
  add_source(s, spectrum.src);
  auto* sk = s->add_option("--k", spectrum.k, "number of nontrivial eigenpairs")->capture_default_str();
  s->add_option("--out", spectrum.out, "eigenvalue CSV")->required();
  s->add_option("--vectors", spectrum.vectors, "per-node eigenvector CSV");
  s->add_option("--coords", spectrum.coords, "per-node coordinate CSV (PLY inputs)");
  s->add_option("--cap", spectrum.cap, "largest order for dense spectra")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "compare the spectrum of a graph with the lift of a partition");
  add_source(v, verify.src);
  v->add_option("--part", verify.part, "partition file")->required();
  auto* vk = v->add_option("--k", verify.k, "number of nontrivial eigenpairs")->capture_default_str();
  v->add_option("--out-prefix", verify.out_prefix, "output path prefix")->required();
  v->add_option("--cap", verify.cap, "largest order for dense spectra")->capture_default_str();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "thread-scaling sweep");
  add_source(b, bench.src, false);
  b->add_option("--gen", bench.gen, "grid:RxC | powerlaw:n,attach,seed");
  b->add_option("--threads", bench.threads, "ascending thread counts")->delimiter(',')->capture_default_str();
  b->add_option("--repeat", bench.repeat, "repetitions per thread count")->capture_default_str();
  b->add_option("--ratio", bench.ratio, "target fraction of nodes")->capture_default_str();
  b->add_option("--out", bench.out, "timing CSV")->required();

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a synthetic graph");
  g->add_option("--grid", gen.grid, "RxC lattice");
  g->add_option("--powerlaw", gen.powerlaw, "n,attach,seed preferential attachment");
  g->add_option("--out", gen.out, "weighted edge list")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    if (c->parsed()) return cmd_coarsen(coarsen, out);
    if (s->parsed()) {
      spectrum.k_given = sk->count() > 0;
      return cmd_spectrum(spectrum, out);
    }
    if (v->parsed()) {
      verify.k_given = vk->count() > 0;
      return cmd_verify(verify, out);
    }
    if (b->parsed()) return cmd_bench(bench, out);
    if (g->parsed()) return cmd_gen(gen, out);
  } catch (const InvalidArgument& e) {
    err << "sgc: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const IoError& e) {
    err << "sgc: " << e.what() << '\n';
    return kIoFailure;
  } catch (const ParseError& e) {
    err << "sgc: " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const GraphError& e) {
    err << "sgc: invalid graph: " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const std::exception& e) {
    err << "sgc: " << e.what() << '\n';
    return kFailure;
  }
  return kInvalidArguments;
}

}  // namespace sgc::cli

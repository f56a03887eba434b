#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/error.hpp"
#include "sgc/graph.hpp"
#include "sgc/partition.hpp"

namespace sgc {

enum class GraphFormat { SnapEdgelist, MatrixMarket, PlyAscii, WeightedEdgelist };

/// "snap-edgelist", "matrix-market", "ply-ascii", "weighted-edgelist".
std::optional<GraphFormat> parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat format);

struct LoadedGraph {
  Graph graph;
  /// SNAP inputs: original id of each compacted node.
  std::vector<std::int64_t> original_ids;
  /// PLY inputs: vertex positions.
  std::vector<std::array<double, 3>> coordinates;
};

/// "u v" lines, '#' comments. Ids are compacted to 0..n-1 in ascending
/// original order; repeated and reversed lines collapse to one unit edge and
/// self-loops are dropped.
LoadedGraph load_snap_edgelist(std::istream& in);

/// Coordinate MatrixMarket, real/integer/pattern, symmetric or general.
Graph load_matrix_market(std::istream& in);

/// ASCII PLY mesh; each face contributes its boundary edges at unit weight.
LoadedGraph load_ply_ascii(std::istream& in);

/// "u v w" lines as written by write_weighted_edgelist.
Graph load_weighted_edgelist(std::istream& in);

LoadedGraph load_graph(std::istream& in, GraphFormat format);
/// Throws IoError if the file cannot be opened.
LoadedGraph load_graph_file(const std::filesystem::path& path, GraphFormat format);

/// Shortest-exact rendering used by every writer: 17 significant digits.
std::string format_real(double x);

/// "u v w" with u <= v in canonical order, one edge per line.
void write_weighted_edgelist(std::ostream& out, const Graph& g);
/// Line i holds the supernode label of node i.
void write_partition(std::ostream& out, const Partition& part);
/// Reads a partition file for an n-node graph. Throws ParseError.
Partition read_partition(std::istream& in, std::size_t n);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);

/// Writes through `write` into `path`, throwing IoError on failure.
template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace sgc

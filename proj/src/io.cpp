#include "sgc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace sgc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  T value{};
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError(where(line_no) + "invalid number '" + std::string(token) + "'");
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

/// Unit-weight graph from undirected pairs, with duplicates collapsed.
Graph unit_graph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs) {
  for (auto& [a, b] : pairs)
    if (a > b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b, 1.0});
  return Graph::from_edges(n, edges);
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "snap-edgelist") return GraphFormat::SnapEdgelist;
  if (name == "matrix-market") return GraphFormat::MatrixMarket;
  if (name == "ply-ascii") return GraphFormat::PlyAscii;
  if (name == "weighted-edgelist") return GraphFormat::WeightedEdgelist;
  return std::nullopt;
}

std::string_view format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::SnapEdgelist: return "snap-edgelist";
    case GraphFormat::MatrixMarket: return "matrix-market";
    case GraphFormat::PlyAscii: return "ply-ascii";
    case GraphFormat::WeightedEdgelist: return "weighted-edgelist";
  }
  return "unknown";
}

LoadedGraph load_snap_edgelist(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) throw ParseError(where(line_no) + "expected two node ids");
    const auto u = parse_number<std::int64_t>(tokens[0], line_no);
    const auto v = parse_number<std::int64_t>(tokens[1], line_no);
    if (u != v) raw.emplace_back(u, v);
  }
  if (raw.empty()) throw ParseError("empty graph");

  LoadedGraph out;
  auto& ids = out.original_ids;
  ids.reserve(2 * raw.size());
  for (const auto& [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto compact = [&](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(raw.size());
  for (const auto& [u, v] : raw) pairs.emplace_back(compact(u), compact(v));
  out.graph = unit_graph(ids.size(), std::move(pairs));
  return out;
}

Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty MatrixMarket input");
  const auto banner = split_ws(line);
  if (banner.size() != 5 || lower(banner[0]) != "%%matrixmarket" || lower(banner[1]) != "matrix" ||
      lower(banner[2]) != "coordinate")
    throw ParseError("expected '%%MatrixMarket matrix coordinate <field> <symmetry>' header");
  const std::string field = lower(banner[3]);
  const std::string symmetry = lower(banner[4]);
  if (field != "real" && field != "integer" && field != "pattern")
    throw ParseError("unsupported MatrixMarket field '" + field + "'");
  if (symmetry != "symmetric" && symmetry != "general")
    throw ParseError("unsupported MatrixMarket symmetry '" + symmetry + "'");
  const bool pattern = field == "pattern";

  std::vector<std::string_view> size_tokens;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '%') continue;
    size_tokens = split_ws(line);
    if (!size_tokens.empty()) break;
  }
  if (size_tokens.size() != 3) throw ParseError(where(line_no) + "expected 'rows cols entries'");
  const auto rows = parse_number<std::size_t>(size_tokens[0], line_no);
  const auto cols = parse_number<std::size_t>(size_tokens[1], line_no);
  const auto nnz = parse_number<std::size_t>(size_tokens[2], line_no);
  if (rows != cols) throw ParseError("adjacency matrix must be square");

  std::map<std::pair<NodeId, NodeId>, double> entries;
  std::vector<WeightedEdge> edges;
  std::size_t seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '%') continue;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != (pattern ? 2u : 3u)) throw ParseError(where(line_no) + "malformed entry");
    const auto i = parse_number<std::size_t>(tokens[0], line_no);
    const auto j = parse_number<std::size_t>(tokens[1], line_no);
    const double value = pattern ? 1.0 : parse_number<double>(tokens[2], line_no);
    if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError(where(line_no) + "index out of range");
    if (!(value > 0.0)) throw ParseError(where(line_no) + "non-positive weight");
    const auto a = static_cast<NodeId>(i - 1);
    const auto b = static_cast<NodeId>(j - 1);
    if (symmetry == "symmetric")
      edges.push_back({a, b, value});
    else
      entries[{a, b}] += value;
    ++seen;
  }
  if (seen < nnz) throw ParseError("expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen));

  if (symmetry == "general") {
    for (const auto& [key, value] : entries) {
      const auto [a, b] = key;
      if (a > b) {
        if (!entries.contains({b, a})) throw ParseError("general matrix is not symmetric");
        continue;
      }
      if (a == b) {
        edges.push_back({a, b, value});
        continue;
      }
      const auto partner = entries.find({b, a});
      if (partner == entries.end()) throw ParseError("general matrix is not symmetric");
      const double other = partner->second;
      if (std::abs(value - other) > 1e-12 * std::max({1.0, std::abs(value), std::abs(other)}))
        throw ParseError("general matrix is not symmetric");
      edges.push_back({a, b, value == other ? value : 0.5 * (value + other)});
    }
  }
  return Graph::from_edges(rows, edges);
}

LoadedGraph load_ply_ascii(std::istream& in) {
  struct Property {
    std::string name;
    bool is_list = false;
  };
  struct Element {
    std::string name;
    std::size_t count = 0;
    std::vector<Property> properties;
  };

  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || split_ws(line) != std::vector<std::string_view>{"ply"})
    throw ParseError("missing 'ply' magic line");
  std::vector<Element> elements;
  bool have_format = false;
  while (true) {
    if (!std::getline(in, line)) throw ParseError("unterminated PLY header");
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const auto& key = tokens[0];
    if (key == "end_header") break;
    if (key == "comment" || key == "obj_info") continue;
    if (key == "format") {
      if (tokens.size() < 2) throw ParseError(where(line_no) + "malformed format line");
      if (tokens[1] != "ascii") throw ParseError("binary PLY is not supported");
      have_format = true;
    } else if (key == "element") {
      if (tokens.size() != 3) throw ParseError(where(line_no) + "malformed element line");
      elements.push_back({std::string(tokens[1]), parse_number<std::size_t>(tokens[2], line_no), {}});
    } else if (key == "property") {
      if (elements.empty()) throw ParseError(where(line_no) + "property before element");
      if (tokens.size() == 5 && tokens[1] == "list")
        elements.back().properties.push_back({std::string(tokens[4]), true});
      else if (tokens.size() == 3)
        elements.back().properties.push_back({std::string(tokens[2]), false});
      else
        throw ParseError(where(line_no) + "malformed property line");
    } else {
      throw ParseError(where(line_no) + "unknown header keyword '" + std::string(key) + "'");
    }
  }
  if (!have_format) throw ParseError("PLY header has no format line");

  LoadedGraph out;
  std::size_t num_vertices = 0;
  bool have_vertices = false;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& element : elements) {
    const bool is_vertex = element.name == "vertex";
    const bool is_face = element.name == "face";
    if (is_vertex) {
      num_vertices = element.count;
      have_vertices = true;
      out.coordinates.assign(num_vertices, {0.0, 0.0, 0.0});
    }
    if (is_face && !have_vertices) throw ParseError("face element precedes vertex element");
    for (std::size_t row = 0; row < element.count; ++row) {
      if (!std::getline(in, line)) throw ParseError("truncated PLY body in element '" + element.name + "'");
      ++line_no;
      const auto tokens = split_ws(line);
      std::size_t pos = 0;
      auto next = [&]() {
        if (pos >= tokens.size()) throw ParseError(where(line_no) + "too few values");
        return tokens[pos++];
      };
      bool face_done = false;
      for (const auto& prop : element.properties) {
        if (!prop.is_list) {
          const auto token = next();
          if (is_vertex) {
            const int axis = prop.name == "x" ? 0 : prop.name == "y" ? 1 : prop.name == "z" ? 2 : -1;
            if (axis >= 0) out.coordinates[row][axis] = parse_number<double>(token, line_no);
          }
          continue;
        }
        const auto count = parse_number<std::size_t>(next(), line_no);
        std::vector<NodeId> ring;
        ring.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
          const auto idx = parse_number<std::int64_t>(next(), line_no);
          if (is_face && !face_done && (idx < 0 || static_cast<std::size_t>(idx) >= num_vertices))
            throw ParseError(where(line_no) + "face index " + std::to_string(idx) + " out of range");
          ring.push_back(static_cast<NodeId>(idx));
        }
        if (is_face && !face_done) {
          face_done = true;
          for (std::size_t k = 0; k < ring.size() && ring.size() >= 2; ++k) {
            const NodeId a = ring[k];
            const NodeId b = ring[(k + 1) % ring.size()];
            if (a != b) pairs.emplace_back(a, b);
          }
        }
      }
    }
  }
  if (!have_vertices) throw ParseError("PLY has no vertex element");
  out.graph = unit_graph(num_vertices, std::move(pairs));
  return out;
}

Graph load_weighted_edgelist(std::istream& in) {
  std::vector<WeightedEdge> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 3) throw ParseError(where(line_no) + "expected 'u v w'");
    const auto u = parse_number<NodeId>(tokens[0], line_no);
    const auto v = parse_number<NodeId>(tokens[1], line_no);
    const auto w = parse_number<double>(tokens[2], line_no);
    if (!(w > 0.0)) throw ParseError(where(line_no) + "non-positive weight");
    n = std::max<std::size_t>(n, std::max(u, v) + std::size_t{1});
    edges.push_back({u, v, w});
  }
  if (edges.empty()) throw ParseError("empty graph");
  return Graph::from_edges(n, edges);
}

LoadedGraph load_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::SnapEdgelist: return load_snap_edgelist(in);
    case GraphFormat::MatrixMarket: return {load_matrix_market(in), {}, {}};
    case GraphFormat::PlyAscii: return load_ply_ascii(in);
    case GraphFormat::WeightedEdgelist: return {load_weighted_edgelist(in), {}, {}};
  }
  throw InvalidArgument("unknown graph format");
}

LoadedGraph load_graph_file(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  auto loaded = load_graph(in, format);
  if (in.bad()) throw IoError("failed reading " + path.string());
  return loaded;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_weighted_edgelist(std::ostream& out, const Graph& g) {
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_real(e.weight) << '\n';
}

void write_partition(std::ostream& out, const Partition& part) {
  for (const NodeId label : part.labels()) out << label << '\n';
}

Partition read_partition(std::istream& in, std::size_t n) {
  std::vector<std::int64_t> labels;
  labels.reserve(n);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 1) throw ParseError(where(line_no) + "expected one supernode label");
    const auto label = parse_number<std::int64_t>(tokens[0], line_no);
    if (label < 0) throw ParseError(where(line_no) + "negative supernode label");
    labels.push_back(label);
  }
  if (labels.size() != n)
    throw ParseError("partition has " + std::to_string(labels.size()) + " labels, graph has " + std::to_string(n) +
                     " nodes");
  return Partition::from_labels(labels);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      const auto& f = fields[i];
      if (f.find_first_of(",\"\n") == std::string::npos) {
        out << f;
      } else {
        out << '"';
        for (const char c : f) out << (c == '"' ? "\"\"" : std::string(1, c));
        out << '"';
      }
    }
    out << '\n';
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
}

}  // namespace sgc

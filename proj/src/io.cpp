#include "gfm/io.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gfm/error.hpp"

namespace gfm {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t begin = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > begin) tokens.push_back(line.substr(begin, i - begin));
  }
  return tokens;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double parse_number(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, at_line(line) + "'" + std::string(token) + "' is not a number");
  }
  return value;
}

class LabelMap {
 public:
  VertexId intern(std::string_view label) {
    const auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
  }

  std::optional<VertexId> find(std::string_view label) const {
    const auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> release() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

template <class T>
void put_le(std::ostream& out, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  auto bits = std::bit_cast<U>(value);
  std::array<char, sizeof(U)> bytes{};
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    bytes[i] = static_cast<char>(bits & 0xffu);
    bits >>= 8;
  }
  out.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& in) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  std::array<unsigned char, sizeof(U)> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw Error(ErrorKind::CacheFormat, "distance cache is truncated");
  }
  U bits = 0;
  for (std::size_t i = sizeof(U); i-- > 0;) bits = (bits << 8) | bytes[i];
  return std::bit_cast<T>(bits);
}

constexpr std::string_view kCacheMagic = "GFMDIST1";

}  // namespace

WeightedGraph parse_graph(std::istream& edges, std::istream* node_weights, LengthMode mode) {
  LabelMap labels;
  std::vector<EdgeSpec> specs;
  std::set<std::pair<VertexId, VertexId>> seen;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(edges, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() > 3 || tokens.size() < 2) {
      throw Error(ErrorKind::ParseError, at_line(lineno) + "expected 'u v [w]'");
    }
    double length = 1.0;
    if (tokens.size() == 3) {
      const double w = parse_number(tokens[2], lineno);
      if (mode == LengthMode::CoauthorCounts) {
        if (!(w > 0.0)) {
          throw Error(ErrorKind::ParseError, at_line(lineno) + "coauthor count must be positive");
        }
        length = 1.0 / w;
      } else {
        length = w;
      }
    }
    if (tokens[0] == tokens[1]) {
      throw Error(ErrorKind::SelfLoop, at_line(lineno) + "edge " + std::string(tokens[0]) + " -> itself");
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
      throw Error(ErrorKind::NonPositiveLength, at_line(lineno) + "length " + std::string(tokens[2]));
    }
    const VertexId u = labels.intern(tokens[0]);
    const VertexId v = labels.intern(tokens[1]);
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw Error(ErrorKind::DuplicateEdge, at_line(lineno) + "edge " + std::string(tokens[0]) + " " +
                                                std::string(tokens[1]) + " already listed");
    }
    specs.push_back({u, v, length});
  }

  std::vector<double> masses;
  if (node_weights != nullptr) {
    masses.assign(labels.size(), 0.0);
    std::vector<char> assigned(labels.size(), 0);
    lineno = 0;
    while (std::getline(*node_weights, line)) {
      ++lineno;
      const auto tokens = tokenize(line);
      if (tokens.empty()) continue;
      if (tokens.size() != 2) {
        throw Error(ErrorKind::ParseError, at_line(lineno) + "expected 'label mass'");
      }
      const auto id = labels.find(tokens[0]);
      if (!id) {
        throw Error(ErrorKind::ParseError, at_line(lineno) + "unknown label '" + std::string(tokens[0]) + "'");
      }
      if (assigned[*id]) {
        throw Error(ErrorKind::ParseError, at_line(lineno) + "label '" + std::string(tokens[0]) + "' repeated");
      }
      const double mass = parse_number(tokens[1], lineno);
      if (!(mass >= 0.0)) {
        throw Error(ErrorKind::NegativeNodeWeight, at_line(lineno) + "mass " + std::string(tokens[1]));
      }
      assigned[*id] = 1;
      masses[*id] = mass;
    }
  }

  return WeightedGraph::build(specs, masses, labels.release());
}

WeightedGraph load_graph(const std::filesystem::path& edges, const std::optional<std::filesystem::path>& node_weights,
                         LengthMode mode) {
  std::ifstream edge_file(edges);
  if (!edge_file) throw Error(ErrorKind::Io, "cannot open " + edges.string());
  if (!node_weights) return parse_graph(edge_file, nullptr, mode);
  std::ifstream weight_file(*node_weights);
  if (!weight_file) throw Error(ErrorKind::Io, "cannot open " + node_weights->string());
  return parse_graph(edge_file, &weight_file, mode);
}

void write_edge_list(std::ostream& out, const WeightedGraph& graph) {
  for (const auto& e : graph.edges()) {
    out << graph.label(e.tail) << ' ' << graph.label(e.head) << ' ' << format_double(e.length) << '\n';
  }
}

void write_node_weights(std::ostream& out, const WeightedGraph& graph) {
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << graph.label(v) << ' ' << format_double(graph.node_weight(v)) << '\n';
  }
}

void save_distance_cache(std::ostream& out, const GeodesicTable& table) {
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_le<std::uint64_t>(out, table.size());
  for (double d : table.distances()) put_le<double>(out, d);
  for (VertexId v : table.next_hops()) put_le<std::uint32_t>(out, v);
  if (!out) throw Error(ErrorKind::Io, "failed writing distance cache");
}

GeodesicTable load_distance_cache(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || std::string_view(magic.data(), magic.size()) != kCacheMagic) {
    throw Error(ErrorKind::CacheFormat, "missing GFMDIST1 header");
  }
  const auto n = get_le<std::uint64_t>(in);
  if (n == 0 || n > (std::uint64_t{1} << 20)) {
    throw Error(ErrorKind::CacheFormat, "implausible vertex count " + std::to_string(n));
  }
  std::vector<double> dist(n * n);
  for (auto& d : dist) d = get_le<double>(in);
  std::vector<VertexId> next(n * n);
  for (auto& v : next) {
    v = get_le<std::uint32_t>(in);
    if (v >= n) throw Error(ErrorKind::CacheFormat, "next hop " + std::to_string(v) + " out of range");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorKind::CacheFormat, "trailing bytes after distance cache");
  }
  return GeodesicTable(n, std::move(dist), std::move(next));
}

void save_distance_cache(const std::filesystem::path& path, const GeodesicTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  save_distance_cache(out, table);
}

GeodesicTable load_distance_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return load_distance_cache(in);
}

}  // namespace gfm

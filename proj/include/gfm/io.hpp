#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "gfm/graph.hpp"
#include "gfm/shortest_paths.hpp"

namespace gfm {

/// How the third column of an edge list is read. In coauthor-count mode the
/// column is a number of joint papers k and the edge length is 1/k.
enum class LengthMode { Lengths, CoauthorCounts };

/// Reads "u v [w]" lines ('#' starts a comment, labels are any
/// non-whitespace tokens, w defaults to 1) and optionally "label mass"
/// lines. Labels missing from the mass file get zero mass; no mass file
/// means uniform. Errors carry the offending line number.
WeightedGraph parse_graph(std::istream& edges, std::istream* node_weights, LengthMode mode = LengthMode::Lengths);

WeightedGraph load_graph(const std::filesystem::path& edges, const std::optional<std::filesystem::path>& node_weights,
                         LengthMode mode = LengthMode::Lengths);

/// One "u v length" line per edge, labels preserved, lengths printed with
/// round-trip precision.
void write_edge_list(std::ostream& out, const WeightedGraph& graph);

/// One "label mass" line per vertex.
void write_node_weights(std::ostream& out, const WeightedGraph& graph);

/// Binary distance cache: "GFMDIST1", little-endian u64 N, N^2 little-endian
/// f64 distances row-major, then N^2 little-endian u32 next hops.
void save_distance_cache(std::ostream& out, const GeodesicTable& table);
GeodesicTable load_distance_cache(std::istream& in);

void save_distance_cache(const std::filesystem::path& path, const GeodesicTable& table);
GeodesicTable load_distance_cache(const std::filesystem::path& path);

/// Two random connected clusters of `per_cluster` vertices, ids [0, n) and
/// [n, 2n), joined by `bridges` unit edges. Each cluster grows by
/// preferential attachment with about `intra_degree` / 2 links per new
/// vertex, and its first vertex (the ego) is then joined to every member.
/// Bridge endpoints are drawn proportionally to degree. Uniform node
/// distribution. Deterministic for a given seed.
WeightedGraph generate_two_cluster(std::size_t per_cluster, std::size_t intra_degree, std::size_t bridges,
                                   std::uint64_t seed);

}  // namespace gfm

#pragma once

#include <cstddef>
#include <vector>

#include "gfm/graph.hpp"

namespace gfm {

/// All-pairs geodesic distances and first-hop routing, stored densely
/// row-major. `next_hop(i, j)` is the first vertex after `i` on the chosen
/// shortest path to `j`; by convention `next_hop(i, i) == i`.
class GeodesicTable {
 public:
  GeodesicTable() = default;
  GeodesicTable(std::size_t n, std::vector<double> dist, std::vector<VertexId> next_hop);

  std::size_t size() const noexcept { return n_; }

  double distance(VertexId i, VertexId j) const noexcept { return dist_[i * n_ + j]; }
  VertexId next_hop(VertexId i, VertexId j) const noexcept { return next_[i * n_ + j]; }

  const std::vector<double>& distances() const noexcept { return dist_; }
  const std::vector<VertexId>& next_hops() const noexcept { return next_; }

  friend bool operator==(const GeodesicTable&, const GeodesicTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<VertexId> next_;
};

struct AllPairsOptions {
  std::size_t max_vertices = 20000;
  /// Number of threads sharing the per-source Dijkstra runs; 0 picks the
  /// hardware concurrency. Output does not depend on this value.
  unsigned workers = 1;
};

/// N single-source Dijkstra runs over the adjacency lists. Vertices settle in
/// (distance, id) order and only strict improvements relax, so routing on
/// tied geodesics is deterministic. Throws TooManyVertices past the cap.
GeodesicTable all_pairs(const WeightedGraph& graph, const AllPairsOptions& options = {});

/// Vertex sequence from `from` to `to` along next-hop links. Throws SameVertex
/// when the endpoints coincide.
std::vector<VertexId> reconstruct_path(const GeodesicTable& table, VertexId from, VertexId to);

}  // namespace gfm

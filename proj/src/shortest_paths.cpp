#include "gfm/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <thread>
#include <utility>

#include "gfm/error.hpp"

namespace gfm {

GeodesicTable::GeodesicTable(std::size_t n, std::vector<double> dist, std::vector<VertexId> next_hop)
    : n_(n), dist_(std::move(dist)), next_(std::move(next_hop)) {
  if (dist_.size() != n * n || next_.size() != n * n) {
    throw Error(ErrorKind::DimensionMismatch, "table storage does not match " + std::to_string(n) + "^2");
  }
}

namespace {

// Fills row `source` of both matrices.
void single_source(const WeightedGraph& graph, VertexId source, double* dist, VertexId* first) {
  const std::size_t n = graph.vertex_count();
  std::fill(dist, dist + n, std::numeric_limits<double>::infinity());
  std::fill(first, first + n, source);
  std::vector<char> settled(n, 0);

  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);

  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    for (const auto& inc : graph.neighbors(v)) {
      const VertexId w = inc.neighbor;
      if (settled[w]) continue;
      const double candidate = d + graph.edge(inc.edge).length;
      if (candidate < dist[w]) {
        dist[w] = candidate;
        first[w] = (v == source) ? w : first[v];
        queue.emplace(candidate, w);
      }
    }
  }
}

}  // namespace

GeodesicTable all_pairs(const WeightedGraph& graph, const AllPairsOptions& options) {
  const std::size_t n = graph.vertex_count();
  if (n > options.max_vertices) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(n) + " vertices exceed the limit of " +
                                                std::to_string(options.max_vertices));
  }
  std::vector<double> dist(n * n);
  std::vector<VertexId> next(n * n);

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  auto run_rows = [&](unsigned offset) {
    for (std::size_t s = offset; s < n; s += workers) {
      single_source(graph, static_cast<VertexId>(s), dist.data() + s * n, next.data() + s * n);
    }
  };
  if (workers <= 1) {
    run_rows(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_rows, w);
  }

  // Row i and row j sum the same edges in opposite order; take the smaller so
  // the matrix is exactly symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::min(dist[i * n + j], dist[j * n + i]);
      dist[i * n + j] = d;
      dist[j * n + i] = d;
    }
  }
  return GeodesicTable(n, std::move(dist), std::move(next));
}

std::vector<VertexId> reconstruct_path(const GeodesicTable& table, VertexId from, VertexId to) {
  const std::size_t n = table.size();
  if (from >= n || to >= n) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(std::max(from, to)));
  }
  if (from == to) {
    throw Error(ErrorKind::SameVertex, "path endpoints coincide at vertex " + std::to_string(from));
  }
  std::vector<VertexId> path{from};
  VertexId v = from;
  while (v != to) {
    v = table.next_hop(v, to);
    path.push_back(v);
    if (path.size() > n) {
      throw Error(ErrorKind::DimensionMismatch, "next-hop chain does not terminate");
    }
  }
  return path;
}

}  // namespace gfm

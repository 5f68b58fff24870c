#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "gfm/error.hpp"
#include "gfm/io.hpp"

namespace gfm {

namespace {

using Pair = std::pair<VertexId, VertexId>;

Pair ordered(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

// Preferential attachment on [offset, offset + n): a seed clique of m + 1
// vertices, then each new vertex links to m distinct earlier vertices chosen
// with probability proportional to their degree (m = degree / 2, at least 1).
// Returns the edge-end list, one entry per incident edge end.
std::vector<VertexId> grow_cluster(VertexId offset, std::size_t n, std::size_t degree, Rng& rng,
                                   std::set<Pair>& edges) {
  const std::size_t m = std::max<std::size_t>(1, degree / 2);
  // Each vertex appears once per incident edge end.
  std::vector<VertexId> ends;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto a = offset + static_cast<VertexId>(i);
      const auto b = offset + static_cast<VertexId>(j);
      edges.insert(ordered(a, b));
      ends.push_back(a);
      ends.push_back(b);
    }
  }
  std::vector<VertexId> targets;
  for (std::size_t i = m + 1; i < n; ++i) {
    const auto v = offset + static_cast<VertexId>(i);
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
    while (targets.size() < m) {
      const VertexId t = ends[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (const VertexId t : targets) {
      edges.insert(ordered(v, t));
      ends.push_back(v);
      ends.push_back(t);
    }
  }
  // The first vertex is the ego: it knows every member of its cluster.
  for (std::size_t i = 1; i < n; ++i) {
    const auto v = offset + static_cast<VertexId>(i);
    if (edges.insert(ordered(offset, v)).second) {
      ends.push_back(offset);
      ends.push_back(v);
    }
  }
  return ends;
}

}  // namespace

WeightedGraph generate_two_cluster(std::size_t per_cluster, std::size_t intra_degree, std::size_t bridges,
                                   std::uint64_t seed) {
  if (per_cluster < 2 || intra_degree < 1 || std::max<std::size_t>(1, intra_degree / 2) + 1 > per_cluster) {
    throw Error(ErrorKind::InfeasibleDegree, "mean degree " + std::to_string(intra_degree) +
                                                 " impossible in a cluster of " + std::to_string(per_cluster));
  }
  if (bridges > per_cluster * per_cluster / 4) {
    throw Error(ErrorKind::InfeasibleDegree,
                std::to_string(bridges) + " bridges exceed the " + std::to_string(per_cluster * per_cluster / 4) +
                    " allowed cross pairs");
  }

  Rng rng(seed);
  std::set<Pair> intra;
  const auto ends_a = grow_cluster(0, per_cluster, intra_degree, rng, intra);
  const auto ends_b = grow_cluster(static_cast<VertexId>(per_cluster), per_cluster, intra_degree, rng, intra);

  // Bridge endpoints are also drawn proportionally to degree.
  std::set<Pair> cross;
  std::uniform_int_distribution<std::size_t> pick_a(0, ends_a.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_b(0, ends_b.size() - 1);
  while (cross.size() < bridges) {
    cross.emplace(ends_a[pick_a(rng)], ends_b[pick_b(rng)]);
  }

  std::vector<EdgeSpec> specs;
  specs.reserve(intra.size() + cross.size());
  for (const auto& [a, b] : intra) specs.push_back({a, b, 1.0});
  for (const auto& [a, b] : cross) specs.push_back({a, b, 1.0});

  // Bridges may be absent, in which case the second cluster would not be
  // mentioned by any edge touching the first; size the vertex set explicitly.
  std::vector<std::string> labels;
  labels.reserve(2 * per_cluster);
  for (std::size_t v = 0; v < 2 * per_cluster; ++v) labels.push_back(std::to_string(v));
  return WeightedGraph::build(specs, {}, std::move(labels));
}

}  // namespace gfm

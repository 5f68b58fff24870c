#include "gfm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gfm/error.hpp"
#include "gfm/shortest_paths.hpp"

namespace gfm {

namespace {

std::string edge_name(const EdgeSpec& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

WeightedGraph WeightedGraph::build(std::span<const EdgeSpec> edges,
                                   std::span<const double> node_weights,
                                   std::vector<std::string> labels) {
  if (edges.empty()) {
    throw Error(ErrorKind::EmptyGraph, "edge list is empty");
  }

  std::size_t n = std::max(node_weights.size(), labels.size());
  for (const auto& e : edges) {
    n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  }
  if (!node_weights.empty() && node_weights.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "node weights cover " + std::to_string(node_weights.size()) + " vertices, graph has " +
                    std::to_string(n));
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "labels cover " + std::to_string(labels.size()) + " vertices, graph has " + std::to_string(n));
  }

  WeightedGraph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  g.min_length_ = std::numeric_limits<double>::infinity();

  for (const auto& spec : edges) {
    if (spec.u == spec.v) {
      throw Error(ErrorKind::SelfLoop, "edge " + edge_name(spec) + " joins a vertex to itself");
    }
    if (!(spec.length > 0.0) || !std::isfinite(spec.length)) {
      throw Error(ErrorKind::NonPositiveLength,
                  "edge " + edge_name(spec) + " has length " + std::to_string(spec.length));
    }
    const auto id = static_cast<EdgeId>(g.edges_.size());
    const Edge e{std::min(spec.u, spec.v), std::max(spec.u, spec.v), spec.length};
    g.edges_.push_back(e);
    g.adjacency_[e.tail].push_back({e.head, id});
    g.adjacency_[e.head].push_back({e.tail, id});
    g.min_length_ = std::min(g.min_length_, e.length);
    g.max_length_ = std::max(g.max_length_, e.length);
    g.perimeter_ += e.length;
  }

  for (VertexId v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].neighbor == adj[i - 1].neighbor) {
        const auto& first = g.edges_[adj[i - 1].edge];
        throw Error(ErrorKind::DuplicateEdge, "edge (" + std::to_string(first.tail) + "," +
                                                  std::to_string(first.head) + ") appears more than once");
      }
    }
  }

  // Connectivity from vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : g.adjacency_[v]) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  if (const auto it = std::find(seen.begin(), seen.end(), 0); it != seen.end()) {
    throw Error(ErrorKind::Disconnected,
                "vertex " + std::to_string(it - seen.begin()) + " is not reachable from vertex 0");
  }

  if (node_weights.empty()) {
    g.node_weights_.assign(n, 1.0 / static_cast<double>(n));
  } else {
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(node_weights[v] >= 0.0) || !std::isfinite(node_weights[v])) {
        throw Error(ErrorKind::NegativeNodeWeight,
                    "vertex " + std::to_string(v) + " has mass " + std::to_string(node_weights[v]));
      }
      total += node_weights[v];
    }
    if (total <= 0.0) {
      throw Error(ErrorKind::AllZeroNodeWeights, "every vertex has zero mass");
    }
    g.node_weights_.resize(n);
    std::transform(node_weights.begin(), node_weights.end(), g.node_weights_.begin(),
                   [total](double w) { return w / total; });
  }
  g.cumulative_.resize(n);
  std::partial_sum(g.node_weights_.begin(), g.node_weights_.end(), g.cumulative_.begin());

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

std::span<const Incidence> WeightedGraph::neighbors(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  }
  return adjacency_[v];
}

std::size_t WeightedGraph::degree(VertexId v) const { return neighbors(v).size(); }

EdgeId WeightedGraph::find_edge(VertexId u, VertexId v) const {
  const auto adj = neighbors(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v,
                                   [](const Incidence& a, VertexId id) { return a.neighbor < id; });
  return (it != adj.end() && it->neighbor == v) ? it->edge : kNoEdge;
}

double WeightedGraph::node_weight(VertexId v) const {
  if (v >= node_weights_.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  }
  return node_weights_[v];
}

const std::string& WeightedGraph::label(VertexId v) const {
  if (v >= labels_.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  }
  return labels_[v];
}

VertexId WeightedGraph::sample_node(Rng& rng) const {
  const double u = std::uniform_real_distribution<double>(0.0, cumulative_.back())(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) {
    // u can only reach the total through rounding; fall back to the last
    // vertex carrying mass.
    auto last = static_cast<VertexId>(cumulative_.size() - 1);
    while (last > 0 && node_weights_[last] == 0.0) --last;
    return last;
  }
  return static_cast<VertexId>(it - cumulative_.begin());
}

GraphSummary summarize(const WeightedGraph& graph, const GeodesicTable& geodesics) {
  const std::size_t n = graph.vertex_count();
  if (geodesics.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "geodesic table has " + std::to_string(geodesics.size()) +
                                                  " vertices, graph has " + std::to_string(n));
  }
  GraphSummary s;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      s.diameter = std::max(s.diameter, geodesics.distance(i, j));
    }
  }
  s.perimeter = graph.perimeter();
  s.vertex_count = n;
  s.edge_count = graph.edge_count();
  s.max_edge_length = graph.max_edge_length();
  s.min_edge_length = graph.min_edge_length();
  return s;
}

}  // namespace gfm

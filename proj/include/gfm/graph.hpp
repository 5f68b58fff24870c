#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace gfm {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Random stream used everywhere a caller owns randomness.
using Rng = std::mt19937_64;

/// Input edge: endpoints as dense 0-based ids plus a positive length.
struct EdgeSpec {
  VertexId u;
  VertexId v;
  double length;
};

/// Stored edge. Orientation is fixed at construction: `tail < head`, and a
/// coordinate along the edge runs from 0 at `tail` to `length` at `head`.
struct Edge {
  VertexId tail;
  VertexId head;
  double length;

  VertexId other(VertexId v) const noexcept { return v == tail ? head : tail; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable, validated, simple connected undirected graph with a probability
/// distribution over its vertices. Adjacency is a list of lists sorted by
/// neighbor id.
class WeightedGraph {
 public:
  /// Validates and builds. `node_weights` empty means uniform; otherwise it
  /// must have one entry per vertex and is normalized to sum to one.
  /// `labels` empty means labels "0".."N-1".
  static WeightedGraph build(std::span<const EdgeSpec> edges,
                             std::span<const double> node_weights = {},
                             std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  /// Edge joining u and v, or -1 cast to EdgeId when absent.
  EdgeId find_edge(VertexId u, VertexId v) const;
  static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

  double node_weight(VertexId v) const;
  std::span<const double> node_weights() const noexcept { return node_weights_; }

  const std::string& label(VertexId v) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  double min_edge_length() const noexcept { return min_length_; }
  double max_edge_length() const noexcept { return max_length_; }
  double perimeter() const noexcept { return perimeter_; }

  /// Draws a vertex with probability node_weight(v). Consumes exactly one
  /// uniform variate from `rng`.
  VertexId sample_node(Rng& rng) const;

 private:
  WeightedGraph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<double> node_weights_;
  std::vector<double> cumulative_;
  std::vector<std::string> labels_;
  double min_length_ = 0.0;
  double max_length_ = 0.0;
  double perimeter_ = 0.0;
};

class GeodesicTable;

struct GraphSummary {
  double diameter = 0.0;
  double perimeter = 0.0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  double max_edge_length = 0.0;
  double min_edge_length = 0.0;
};

GraphSummary summarize(const WeightedGraph& graph, const GeodesicTable& geodesics);

}  // namespace gfm

#pragma once

#include <optional>

#include "gfm/graph.hpp"
#include "gfm/shortest_paths.hpp"

namespace gfm {

/// A point of the metric graph: an edge and a coordinate in [0, length]
/// measured from the edge's tail.
struct QuantumPosition {
  EdgeId edge = 0;
  double coord = 0.0;

  friend bool operator==(const QuantumPosition&, const QuantumPosition&) = default;
};

/// Motion along `edge`: sign +1 runs toward the head, -1 toward the tail.
struct DirectedStep {
  EdgeId edge = 0;
  int sign = 1;
  double magnitude = 0.0;
};

/// Coordinates within this fraction of the edge length of an endpoint resolve
/// to that vertex.
inline constexpr double kVertexResolution = 1e-12;

/// Canonical representation of a vertex: its first incident edge, at the
/// corresponding endpoint coordinate.
QuantumPosition vertex_position(const WeightedGraph& graph, VertexId v);

/// The vertex this position sits on, if any.
std::optional<VertexId> resolve_vertex(const WeightedGraph& graph, const QuantumPosition& x);

/// Equality of points: two positions resolving to the same vertex compare
/// equal whatever edge represents them.
bool same_point(const WeightedGraph& graph, const QuantumPosition& a, const QuantumPosition& b);

/// Shortest distance from an edge point to a vertex: the better of leaving
/// through the tail or through the head.
double point_to_vertex_distance(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                                VertexId v);

/// Direction of steepest descent of d(., y) at x, with magnitude d(x, y).
/// Returns magnitude 0 where the gradient is undefined: at y itself, and
/// where two geodesics to y leave x in different directions.
DirectedStep descent_direction(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                               VertexId y);

/// Nearer endpoint of the current edge; the tail wins an exact tie.
VertexId nearest_vertex(const WeightedGraph& graph, const QuantumPosition& x);

/// The point at arc length `s` from `x` on a shortest path toward `y`.
/// Inside the current edge the strictly shorter side is taken, with exact ties
/// going toward the tail; beyond it the next-hop chain is followed. Throws
/// Overshoot when `s` exceeds d(x, y) by more than 1e-9.
QuantumPosition advance_along_geodesic(const WeightedGraph& graph, const GeodesicTable& table,
                                       const QuantumPosition& x, VertexId y, double s);

}  // namespace gfm

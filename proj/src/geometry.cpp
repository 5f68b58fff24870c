#include "gfm/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "gfm/error.hpp"

namespace gfm {

namespace {

constexpr double kOvershootTolerance = 1e-9;

bool near_tie(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, a, b}); }

void check_vertex(const GeodesicTable& table, VertexId v) {
  if (v >= table.size()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  }
}

QuantumPosition point_on_edge_from(const WeightedGraph& graph, EdgeId e, VertexId from, double s) {
  const Edge& edge = graph.edge(e);
  const double offset = std::clamp(s, 0.0, edge.length);
  return {e, from == edge.tail ? offset : edge.length - offset};
}

}  // namespace

QuantumPosition vertex_position(const WeightedGraph& graph, VertexId v) {
  const auto& first = graph.neighbors(v).front();
  const Edge& e = graph.edge(first.edge);
  return {first.edge, v == e.tail ? 0.0 : e.length};
}

std::optional<VertexId> resolve_vertex(const WeightedGraph& graph, const QuantumPosition& x) {
  const Edge& e = graph.edge(x.edge);
  const double eps = kVertexResolution * e.length;
  if (x.coord <= eps) return e.tail;
  if (x.coord >= e.length - eps) return e.head;
  return std::nullopt;
}

bool same_point(const WeightedGraph& graph, const QuantumPosition& a, const QuantumPosition& b) {
  const auto va = resolve_vertex(graph, a);
  const auto vb = resolve_vertex(graph, b);
  if (va || vb) return va == vb;
  return a == b;
}

double point_to_vertex_distance(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                                VertexId v) {
  check_vertex(table, v);
  const Edge& e = graph.edge(x.edge);
  return std::min(x.coord + table.distance(e.tail, v), e.length - x.coord + table.distance(e.head, v));
}

DirectedStep descent_direction(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                               VertexId y) {
  check_vertex(table, y);
  if (const auto v = resolve_vertex(graph, x)) {
    if (*v == y) return {x.edge, 1, 0.0};
    const double d = table.distance(*v, y);
    std::size_t geodesic_exits = 0;
    for (const auto& inc : graph.neighbors(*v)) {
      if (near_tie(graph.edge(inc.edge).length + table.distance(inc.neighbor, y), d)) ++geodesic_exits;
    }
    const EdgeId e = graph.find_edge(*v, table.next_hop(*v, y));
    const int sign = graph.edge(e).tail == *v ? 1 : -1;
    return {e, sign, geodesic_exits > 1 ? 0.0 : d};
  }

  const Edge& e = graph.edge(x.edge);
  const double via_tail = x.coord + table.distance(e.tail, y);
  const double via_head = e.length - x.coord + table.distance(e.head, y);
  if (near_tie(via_tail, via_head)) return {x.edge, 1, 0.0};
  return via_tail < via_head ? DirectedStep{x.edge, -1, via_tail} : DirectedStep{x.edge, 1, via_head};
}

VertexId nearest_vertex(const WeightedGraph& graph, const QuantumPosition& x) {
  const Edge& e = graph.edge(x.edge);
  return x.coord <= 0.5 * e.length ? e.tail : e.head;
}

QuantumPosition advance_along_geodesic(const WeightedGraph& graph, const GeodesicTable& table,
                                       const QuantumPosition& x, VertexId y, double s) {
  check_vertex(table, y);
  const Edge& e = graph.edge(x.edge);
  const double via_tail = x.coord + table.distance(e.tail, y);
  const double via_head = e.length - x.coord + table.distance(e.head, y);
  const double total = std::min(via_tail, via_head);
  if (s > total + kOvershootTolerance) {
    throw Error(ErrorKind::Overshoot, "advance of " + std::to_string(s) + " exceeds distance " + std::to_string(total));
  }
  if (s <= 0.0) return x;
  if (s >= total) return vertex_position(graph, y);

  // Leg inside the current edge.
  const bool toward_tail = via_tail <= via_head;
  const double in_edge = toward_tail ? x.coord : e.length - x.coord;
  if (s <= in_edge) {
    return {x.edge, toward_tail ? x.coord - s : x.coord + s};
  }
  double remaining = s - in_edge;
  VertexId v = toward_tail ? e.tail : e.head;

  while (v != y) {
    const VertexId w = table.next_hop(v, y);
    const EdgeId hop = graph.find_edge(v, w);
    const double length = graph.edge(hop).length;
    if (remaining <= length) {
      return point_on_edge_from(graph, hop, v, remaining);
    }
    remaining -= length;
    v = w;
  }
  return vertex_position(graph, y);
}

}  // namespace gfm

#pragma once

#include <optional>
#include <vector>

#include "gfm/geometry.hpp"
#include "gfm/graph.hpp"
#include "gfm/shortest_paths.hpp"

namespace gfm {

/// Frechet energy of every vertex and the set of vertices attaining the
/// minimum (ascending ids).
struct EnergyProfile {
  std::vector<double> energies;
  std::vector<VertexId> argmin;
  double min_energy = 0.0;
  double max_energy = 0.0;
};

/// Numerical estimate of the critical depth of the energy landscape over the
/// metric graph, and of its total oscillation (max - min).
struct LandscapeEstimate {
  double c_star = 0.0;
  double max_elevation = 0.0;
  double resolution = 0.0;
  /// Bound on the discretization error of both quantities: twice the
  /// resolution times the Lipschitz constant 2 * diameter.
  double slack = 0.0;
  std::size_t point_count = 0;
  /// (1 - margin) / c_star; absent when c_star is zero (no upper bound on b).
  std::optional<double> suggested_b;
};

/// Vertices within this absolute distance of the minimum energy share the
/// argmin.
inline constexpr double kArgminTolerance = 1e-12;

/// U(v) = 1/2 sum_y nu(y) d(v, y)^2.
double energy_at_vertex(const WeightedGraph& graph, const GeodesicTable& table, VertexId v);

/// U at an arbitrary point of the metric graph.
double energy_at_point(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x);

/// Exhaustive evaluation over all vertices.
EnergyProfile exact_barycenter(const WeightedGraph& graph, const GeodesicTable& table);

struct LandscapeOptions {
  std::size_t max_points = 5000;
  double margin = 0.1;
};

/// Samples U every <= h along each edge (vertices included), then takes
/// max over point pairs of [H(x,y) - U(x) - U(y)] + min U, where H(x,y) is the
/// lowest achievable maximum of U along a path from x to y.
LandscapeEstimate estimate_cstar(const WeightedGraph& graph, const GeodesicTable& table, double resolution,
                                 const LandscapeOptions& options = {});

}  // namespace gfm

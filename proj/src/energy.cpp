#include "gfm/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gfm/error.hpp"

namespace gfm {

double energy_at_vertex(const WeightedGraph& graph, const GeodesicTable& table, VertexId v) {
  if (v >= graph.vertex_count() || table.size() != graph.vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
  }
  const auto nu = graph.node_weights();
  double sum = 0.0;
  for (VertexId y = 0; y < nu.size(); ++y) {
    const double d = table.distance(v, y);
    sum += nu[y] * d * d;
  }
  return 0.5 * sum;
}

double energy_at_point(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x) {
  const auto nu = graph.node_weights();
  double sum = 0.0;
  for (VertexId y = 0; y < nu.size(); ++y) {
    const double d = point_to_vertex_distance(graph, table, x, y);
    sum += nu[y] * d * d;
  }
  return 0.5 * sum;
}

EnergyProfile exact_barycenter(const WeightedGraph& graph, const GeodesicTable& table) {
  EnergyProfile profile;
  const auto n = static_cast<VertexId>(graph.vertex_count());
  profile.energies.resize(n);
  for (VertexId v = 0; v < n; ++v) profile.energies[v] = energy_at_vertex(graph, table, v);
  const auto [lo, hi] = std::minmax_element(profile.energies.begin(), profile.energies.end());
  profile.min_energy = *lo;
  profile.max_energy = *hi;
  for (VertexId v = 0; v < n; ++v) {
    if (profile.energies[v] <= profile.min_energy + kArgminTolerance) profile.argmin.push_back(v);
  }
  return profile;
}

namespace {

// Union-find over discretization points tracking the lowest energy per set.
class LowestPointForest {
 public:
  explicit LowestPointForest(const std::vector<double>& energy) : parent_(energy.size()), lowest_(energy) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  double lowest(std::size_t root) const { return lowest_[root]; }

  void unite(std::size_t a, std::size_t b) {
    parent_[b] = a;
    lowest_[a] = std::min(lowest_[a], lowest_[b]);
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<double> lowest_;
};

}  // namespace

LandscapeEstimate estimate_cstar(const WeightedGraph& graph, const GeodesicTable& table, double resolution,
                                 const LandscapeOptions& options) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw Error(ErrorKind::NonPositiveResolution, "resolution " + std::to_string(resolution));
  }
  std::size_t segments = 0;
  for (const auto& e : graph.edges()) {
    segments += static_cast<std::size_t>(std::ceil(e.length / resolution));
    if (segments > options.max_points) {
      throw Error(ErrorKind::ResolutionTooFine, "resolution " + std::to_string(resolution) + " needs more than " +
                                                    std::to_string(options.max_points) + " points");
    }
  }

  // Points 0..N-1 are the vertices; interior points follow, edge by edge.
  const std::size_t n = graph.vertex_count();
  std::vector<double> energy;
  energy.reserve(n + segments);
  for (VertexId v = 0; v < n; ++v) energy.push_back(energy_at_vertex(graph, table, v));

  struct Link {
    double level;
    std::size_t a;
    std::size_t b;
  };
  std::vector<Link> links;
  links.reserve(segments);
  const auto edges = graph.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    const auto pieces = static_cast<std::size_t>(std::ceil(e.length / resolution));
    std::size_t previous = e.tail;
    for (std::size_t i = 1; i < pieces; ++i) {
      const double coord = e.length * static_cast<double>(i) / static_cast<double>(pieces);
      const std::size_t current = energy.size();
      energy.push_back(energy_at_point(graph, table, {id, coord}));
      links.push_back({std::max(energy[previous], energy[current]), previous, current});
      previous = current;
    }
    links.push_back({std::max(energy[previous], energy[e.head]), previous, e.head});
  }

  const auto [lo, hi] = std::minmax_element(energy.begin(), energy.end());
  const double min_u = *lo;

  // Kruskal on links ordered by elevation: when two sets first meet at level
  // w, every cross pair has H = w, and the best such pair uses each set's
  // lowest point. x = y contributes -min U.
  std::sort(links.begin(), links.end(), [](const Link& l, const Link& r) {
    if (l.level != r.level) return l.level < r.level;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  LowestPointForest forest(energy);
  double best = -min_u;
  for (const auto& link : links) {
    const std::size_t ra = forest.find(link.a);
    const std::size_t rb = forest.find(link.b);
    if (ra == rb) continue;
    best = std::max(best, link.level - forest.lowest(ra) - forest.lowest(rb));
    forest.unite(ra, rb);
  }

  double diameter = 0.0;
  for (double d : table.distances()) diameter = std::max(diameter, d);

  LandscapeEstimate estimate;
  estimate.c_star = std::max(0.0, best + min_u);
  estimate.max_elevation = *hi - min_u;
  estimate.resolution = resolution;
  estimate.slack = 2.0 * resolution * (2.0 * diameter);
  estimate.point_count = energy.size();
  if (estimate.c_star > 0.0) estimate.suggested_b = (1.0 - options.margin) / estimate.c_star;
  return estimate;
}

}  // namespace gfm

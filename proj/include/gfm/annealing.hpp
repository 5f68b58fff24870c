#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gfm/geometry.hpp"
#include "gfm/graph.hpp"
#include "gfm/shortest_paths.hpp"

namespace gfm {

/// Inverse temperature beta_t = b log(1 + t) and jump intensity
/// alpha_t = lambda (gamma + 1) (t + 1)^gamma, plus simulation controls.
/// gamma = 1 gives the practical intensity lambda (2t + 2).
struct Schedule {
  double b = 1.0;
  double lambda = 1.0;
  double gamma = 1.0;
  double t_max = 100.0;
  double dt = 1e-4;
  /// Trailing fraction of [0, t_max] over which occupation is recorded.
  double window = 0.1;
  /// Fixed starting point; absent means a uniform edge then a uniform
  /// coordinate on it.
  std::optional<QuantumPosition> start;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Throws ScheduleInvalid unless b, lambda, t_max, dt > 0, gamma >= 1,
/// window in (0,1), and dt <= (0.1 * shortest edge)^2.
void validate(const Schedule& schedule, const WeightedGraph& graph);

double beta_at(double t, const Schedule& schedule);
double alpha_at(double t, const Schedule& schedule);

/// Integrated intensity h(t) = lambda ((t + 1)^(gamma + 1) - 1).
double integrated_intensity(double t, const Schedule& schedule);

/// Inverts h: the time T with h(T) = h(t_k) + increment.
double next_jump_time(double t_k, const Schedule& schedule, double increment);

/// Same, with a fresh Exp(1) increment drawn from `rng` (zero draws redrawn).
double next_jump_time(double t_k, const Schedule& schedule, Rng& rng);

/// Poisson clock driven by the integrated intensity.
struct ClockState {
  double t = 0.0;
  std::uint64_t k = 0;
  double next_jump = 0.0;
};

/// Result of moving a signed arc length along the metric graph.
struct GluedMove {
  QuantumPosition position;
  double traveled = 0.0;
};

/// Moves |displacement| along the graph starting in the direction of its
/// sign relative to the edge orientation. Each time a vertex is reached with
/// length left over, one incident edge is picked uniformly (the arrival edge
/// included) and the remainder continues into it.
GluedMove move_with_gluing(const WeightedGraph& graph, const QuantumPosition& x, double displacement, Rng& rng);

/// One Brownian increment of variance `dt` with uniform gluing at vertices.
QuantumPosition brownian_step(const WeightedGraph& graph, const QuantumPosition& x, double dt, Rng& rng);

/// Moves the fraction `f` in [0, 1] of the way to `y` along a geodesic;
/// f = 1 lands on y.
QuantumPosition jump_by_fraction(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                                 VertexId y, double f);

/// min(1, beta_t / alpha_t).
double jump_fraction(double t, const Schedule& schedule);

/// Jump at time t toward y by jump_fraction(t) of the remaining distance.
QuantumPosition jump_toward(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                            VertexId y, double t, const Schedule& schedule);

/// Time-weighted nearest-vertex residence over [start, end].
class OccupationTracker {
 public:
  OccupationTracker(std::size_t vertex_count, double start, double end);

  /// Credits the part of [from, to] inside the window to `v`.
  void record(VertexId v, double from, double to);
  /// Credits one unit to `v` (discrete-time chains).
  void record_step(VertexId v);

  double total() const noexcept { return total_; }
  std::vector<double> frequencies() const;

 private:
  std::vector<double> residence_;
  double start_;
  double end_;
  double total_ = 0.0;
};

struct RunResult {
  VertexId estimate = 0;
  std::vector<double> frequencies;
  double max_frequency = 0.0;
  std::uint64_t jump_count = 0;
  double wall_time = 0.0;
  std::uint64_t seed = 0;

  /// Compares everything except wall time, which is not reproducible.
  bool same_outcome(const RunResult& other) const;
};

/// Argmax of the frequencies (smallest id on ties) packed into a RunResult.
RunResult summarize_occupation(std::vector<double> frequencies, std::uint64_t seed);

struct JumpRecord {
  double t;
  std::uint64_t k;
  QuantumPosition position;
  VertexId target;
  double fraction;
};

using JumpObserver = std::function<void(const JumpRecord&)>;

/// Homogenized simulated annealing on the metric graph: Brownian motion
/// between jump times of the Poisson clock; at each jump a vertex is drawn
/// from the node distribution and the process moves toward it by
/// beta/alpha of the geodesic distance. The result is the nearest-vertex
/// occupation over the trailing window.
///
/// A single Rng seeded with `seed` supplies, in order: the starting point,
/// the first clock gap, then per Brownian step the Gaussian increment and any
/// gluing choices, and per jump the sampled vertex followed by the next gap.
RunResult run_annealing(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                        std::uint64_t seed, const JumpObserver& observer = {});

/// Metropolis-Hastings chain on the vertices with nearest-neighbour uniform
/// proposals and exact energies.
class MetropolisChain {
 public:
  MetropolisChain(const WeightedGraph& graph, std::vector<double> energies, VertexId start);

  /// One proposal/acceptance at inverse temperature beta. Returns whether the
  /// proposal was accepted.
  bool step(double beta, Rng& rng);

  VertexId state() const noexcept { return state_; }

 private:
  const WeightedGraph* graph_;
  std::vector<double> energies_;
  VertexId state_;
};

/// Discrete-time annealing baseline: K = ceil(t_max / dt) steps, step k at
/// inverse temperature beta(k t_max / K), occupation over the trailing
/// window fraction of steps.
RunResult run_mh_baseline(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                          std::uint64_t seed);

}  // namespace gfm

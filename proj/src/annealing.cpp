#include "gfm/annealing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "gfm/energy.hpp"
#include "gfm/error.hpp"

namespace gfm {

namespace {

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::ScheduleInvalid, what);
}

}  // namespace

void validate(const Schedule& s, const WeightedGraph& graph) {
  require(positive_finite(s.b), "b must be positive, got " + std::to_string(s.b));
  require(positive_finite(s.lambda), "lambda must be positive, got " + std::to_string(s.lambda));
  require(std::isfinite(s.gamma) && s.gamma >= 1.0, "gamma must be >= 1, got " + std::to_string(s.gamma));
  require(positive_finite(s.t_max), "t_max must be positive, got " + std::to_string(s.t_max));
  require(positive_finite(s.dt), "dt must be positive, got " + std::to_string(s.dt));
  require(s.window > 0.0 && s.window < 1.0, "window must lie in (0,1), got " + std::to_string(s.window));
  const double cap = 0.1 * graph.min_edge_length();
  // Relative slack so the tuned value (0.1 L_min)^2 always passes.
  require(s.dt <= cap * cap * (1.0 + 1e-12),
          "dt " + std::to_string(s.dt) + " exceeds (0.1 * shortest edge)^2 = " + std::to_string(cap * cap));
  if (s.start) {
    require(s.start->edge < graph.edge_count(), "start edge " + std::to_string(s.start->edge) + " does not exist");
    const double len = graph.edge(s.start->edge).length;
    require(s.start->coord >= 0.0 && s.start->coord <= len, "start coordinate outside its edge");
  }
}

double beta_at(double t, const Schedule& schedule) { return schedule.b * std::log1p(t); }

double alpha_at(double t, const Schedule& schedule) {
  return schedule.lambda * (schedule.gamma + 1.0) * std::pow(t + 1.0, schedule.gamma);
}

double integrated_intensity(double t, const Schedule& schedule) {
  return schedule.lambda * (std::pow(t + 1.0, schedule.gamma + 1.0) - 1.0);
}

double next_jump_time(double t_k, const Schedule& schedule, double increment) {
  if (increment <= 0.0) return t_k;
  const double p = schedule.gamma + 1.0;
  const double level = std::pow(t_k + 1.0, p) + increment / schedule.lambda;
  const double t = (p == 2.0 ? std::sqrt(level) : std::pow(level, 1.0 / p)) - 1.0;
  return t > t_k ? t : std::nextafter(t_k, std::numeric_limits<double>::infinity());
}

double next_jump_time(double t_k, const Schedule& schedule, Rng& rng) {
  std::exponential_distribution<double> gap(1.0);
  double e = gap(rng);
  while (e <= 0.0) e = gap(rng);
  return next_jump_time(t_k, schedule, e);
}

GluedMove move_with_gluing(const WeightedGraph& graph, const QuantumPosition& x, double displacement, Rng& rng) {
  QuantumPosition pos = x;
  int direction = displacement >= 0.0 ? 1 : -1;
  double remaining = std::abs(displacement);
  double traveled = 0.0;

  for (;;) {
    const Edge& e = graph.edge(pos.edge);
    const double room = direction > 0 ? e.length - pos.coord : pos.coord;
    if (remaining <= room) {
      pos.coord = std::clamp(pos.coord + direction * remaining, 0.0, e.length);
      traveled += remaining;
      break;
    }
    traveled += room;
    remaining -= room;
    const VertexId v = direction > 0 ? e.head : e.tail;
    const auto incident = graph.neighbors(v);
    std::size_t pick = 0;
    if (incident.size() > 1) {
      pick = std::uniform_int_distribution<std::size_t>(0, incident.size() - 1)(rng);
    }
    const Edge& next = graph.edge(incident[pick].edge);
    pos.edge = incident[pick].edge;
    if (v == next.tail) {
      pos.coord = 0.0;
      direction = 1;
    } else {
      pos.coord = next.length;
      direction = -1;
    }
  }
  return {pos, traveled};
}

QuantumPosition brownian_step(const WeightedGraph& graph, const QuantumPosition& x, double dt, Rng& rng) {
  const double xi = std::normal_distribution<double>(0.0, std::sqrt(dt))(rng);
  return move_with_gluing(graph, x, xi, rng).position;
}

QuantumPosition jump_by_fraction(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                                 VertexId y, double f) {
  if (f <= 0.0) return x;
  if (f >= 1.0) return vertex_position(graph, y);
  const double d = point_to_vertex_distance(graph, table, x, y);
  if (d == 0.0) return x;
  return advance_along_geodesic(graph, table, x, y, f * d);
}

double jump_fraction(double t, const Schedule& schedule) {
  return std::min(1.0, beta_at(t, schedule) / alpha_at(t, schedule));
}

QuantumPosition jump_toward(const WeightedGraph& graph, const GeodesicTable& table, const QuantumPosition& x,
                            VertexId y, double t, const Schedule& schedule) {
  return jump_by_fraction(graph, table, x, y, jump_fraction(t, schedule));
}

OccupationTracker::OccupationTracker(std::size_t vertex_count, double start, double end)
    : residence_(vertex_count, 0.0), start_(start), end_(end) {}

void OccupationTracker::record(VertexId v, double from, double to) {
  const double lo = std::max(from, start_);
  const double hi = std::min(to, end_);
  if (hi > lo) {
    residence_[v] += hi - lo;
    total_ += hi - lo;
  }
}

void OccupationTracker::record_step(VertexId v) {
  residence_[v] += 1.0;
  total_ += 1.0;
}

std::vector<double> OccupationTracker::frequencies() const {
  std::vector<double> f(residence_.size(), 0.0);
  if (total_ > 0.0) {
    std::transform(residence_.begin(), residence_.end(), f.begin(), [this](double r) { return r / total_; });
  }
  return f;
}

bool RunResult::same_outcome(const RunResult& other) const {
  return estimate == other.estimate && frequencies == other.frequencies && max_frequency == other.max_frequency &&
         jump_count == other.jump_count && seed == other.seed;
}

RunResult summarize_occupation(std::vector<double> frequencies, std::uint64_t seed) {
  RunResult result;
  result.seed = seed;
  const auto best = std::max_element(frequencies.begin(), frequencies.end());
  result.estimate = static_cast<VertexId>(best - frequencies.begin());
  result.max_frequency = *best;
  result.frequencies = std::move(frequencies);
  return result;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

QuantumPosition initial_position(const WeightedGraph& graph, const Schedule& schedule, Rng& rng) {
  if (schedule.start) return *schedule.start;
  const auto e = static_cast<EdgeId>(std::uniform_int_distribution<std::size_t>(0, graph.edge_count() - 1)(rng));
  const double coord = std::uniform_real_distribution<double>(0.0, graph.edge(e).length)(rng);
  return {e, coord};
}

}  // namespace

RunResult run_annealing(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                        std::uint64_t seed, const JumpObserver& observer) {
  validate(schedule, graph);
  const auto started = Clock::now();

  Rng rng(seed);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  QuantumPosition x = initial_position(graph, schedule, rng);
  ClockState clock{0.0, 0, next_jump_time(0.0, schedule, rng)};
  OccupationTracker tracker(graph.vertex_count(), schedule.t_max * (1.0 - schedule.window), schedule.t_max);

  while (clock.t < schedule.t_max) {
    const double step_end = std::min({clock.t + schedule.dt, clock.next_jump, schedule.t_max});
    tracker.record(nearest_vertex(graph, x), clock.t, step_end);
    const double xi = gaussian(rng) * std::sqrt(step_end - clock.t);
    x = move_with_gluing(graph, x, xi, rng).position;
    clock.t = step_end;

    if (clock.t == clock.next_jump) {
      const VertexId y = graph.sample_node(rng);
      const double f = jump_fraction(clock.t, schedule);
      x = jump_by_fraction(graph, table, x, y, f);
      ++clock.k;
      if (observer) observer({clock.t, clock.k, x, y, f});
      clock.next_jump = next_jump_time(clock.t, schedule, rng);
    }
  }

  RunResult result = summarize_occupation(tracker.frequencies(), seed);
  result.jump_count = clock.k;
  result.wall_time = seconds_since(started);
  return result;
}

MetropolisChain::MetropolisChain(const WeightedGraph& graph, std::vector<double> energies, VertexId start)
    : graph_(&graph), energies_(std::move(energies)), state_(start) {
  if (energies_.size() != graph.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch, "one energy per vertex required");
  }
  if (start >= graph.vertex_count()) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(start));
  }
}

bool MetropolisChain::step(double beta, Rng& rng) {
  const auto incident = graph_->neighbors(state_);
  const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, incident.size() - 1)(rng);
  const VertexId proposal = incident[pick].neighbor;
  // Hastings correction for uniform-neighbour proposals: L(x',x)/L(x,x') = n_x / n_x'.
  const double ratio = std::exp(beta * (energies_[state_] - energies_[proposal])) *
                       static_cast<double>(incident.size()) / static_cast<double>(graph_->degree(proposal));
  if (ratio >= 1.0 || std::uniform_real_distribution<double>(0.0, 1.0)(rng) < ratio) {
    state_ = proposal;
    return true;
  }
  return false;
}

RunResult run_mh_baseline(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                          std::uint64_t seed) {
  validate(schedule, graph);
  const auto started = Clock::now();

  Rng rng(seed);
  const VertexId start =
      schedule.start ? nearest_vertex(graph, *schedule.start)
                     : static_cast<VertexId>(
                           std::uniform_int_distribution<std::size_t>(0, graph.vertex_count() - 1)(rng));
  MetropolisChain chain(graph, exact_barycenter(graph, table).energies, start);

  const auto steps = static_cast<std::uint64_t>(std::ceil(schedule.t_max / schedule.dt));
  const auto window_first =
      static_cast<std::uint64_t>(std::floor(static_cast<double>(steps) * (1.0 - schedule.window)));
  OccupationTracker tracker(graph.vertex_count(), 0.0, 0.0);
  std::uint64_t accepted = 0;
  for (std::uint64_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * schedule.t_max / static_cast<double>(steps);
    if (chain.step(beta_at(t, schedule), rng)) ++accepted;
    if (k >= window_first) tracker.record_step(chain.state());
  }

  RunResult result = summarize_occupation(tracker.frequencies(), seed);
  result.jump_count = accepted;
  result.wall_time = seconds_since(started);
  return result;
}

}  // namespace gfm

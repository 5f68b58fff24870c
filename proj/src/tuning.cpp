#include "gfm/tuning.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "gfm/error.hpp"

namespace gfm {

TuningReport tuning_report(const GraphSummary& summary) {
  if (!(summary.diameter > 0.0)) {
    throw Error(ErrorKind::ZeroDiameter, "graph diameter is zero; nothing to tune");
  }
  TuningReport r;
  r.vertex_count = summary.vertex_count;
  r.diameter = summary.diameter;
  r.t_max_star = 100.0 + 0.1 * static_cast<double>(summary.vertex_count);
  r.b_star = 2.0 / summary.diameter;
  r.s_star = kTargetJumpsPerUnit;
  r.lambda_star = r.s_star / (2.0 * r.t_max_star + 1.0);
  const double step = 0.1 * summary.min_edge_length;
  r.dt = step * step;
  return r;
}

Schedule schedule_from(const TuningReport& report) {
  Schedule s;
  s.b = report.b_star;
  s.lambda = report.lambda_star;
  s.gamma = 1.0;
  s.t_max = report.t_max_star;
  s.dt = report.dt;
  return s;
}

Schedule auto_tune(const WeightedGraph& graph, const GraphSummary& summary, const ScheduleOverrides& overrides) {
  Schedule s = schedule_from(tuning_report(summary));
  if (overrides.b) s.b = *overrides.b;
  if (overrides.lambda) s.lambda = *overrides.lambda;
  if (overrides.gamma) s.gamma = *overrides.gamma;
  if (overrides.t_max) s.t_max = *overrides.t_max;
  if (overrides.dt) s.dt = *overrides.dt;
  if (overrides.window) s.window = *overrides.window;
  if (overrides.start) s.start = overrides.start;
  validate(s, graph);
  return s;
}

namespace {

constexpr std::array kPresets{
    SweepPreset{"quarter-beta", 0.25, 1.0, 1.0},
    SweepPreset{"half-beta", 0.5, 1.0, 1.0},
    SweepPreset{"beta", 1.0, 1.0, 1.0},
    SweepPreset{"double-beta", 2.0, 1.0, 1.0},
    SweepPreset{"quad-beta", 4.0, 1.0, 1.0},
    SweepPreset{"oct-beta", 8.0, 1.0, 1.0},
    SweepPreset{"half-s", 1.0, 0.5, 1.0},
    SweepPreset{"double-s", 1.0, 2.0, 1.0},
    SweepPreset{"double-tmax", 1.0, 1.0, 2.0},
    SweepPreset{"quad-tmax", 1.0, 1.0, 4.0},
    SweepPreset{"double-s-double-tmax", 1.0, 2.0, 2.0},
    SweepPreset{"double-s-quad-tmax", 1.0, 2.0, 4.0},
};

}  // namespace

std::span<const SweepPreset> preset_registry() { return kPresets; }

const SweepPreset& find_preset(std::string_view name) {
  const auto it = std::find_if(kPresets.begin(), kPresets.end(), [&](const SweepPreset& p) { return p.name == name; });
  if (it == kPresets.end()) {
    throw Error(ErrorKind::UnknownPreset, "no preset named '" + std::string(name) + "'");
  }
  return *it;
}

Schedule apply_preset(const TuningReport& report, const SweepPreset& preset) {
  Schedule s = schedule_from(report);
  s.b = report.b_star * preset.beta_factor;
  s.t_max = report.t_max_star * preset.horizon_factor;
  s.lambda = report.s_star * preset.jumps_factor / (2.0 * s.t_max + 1.0);
  return s;
}

std::optional<std::string> admissibility_warning(const Schedule& schedule, const LandscapeEstimate& landscape) {
  const double product = schedule.b * landscape.c_star;
  if (product <= 1.0) return std::nullopt;
  std::ostringstream msg;
  msg << "b * c_star = " << product << " > 1: cooling faster than the estimated critical depth admits";
  if (landscape.suggested_b) msg << " (suggested b <= " << *landscape.suggested_b << ")";
  return msg.str();
}

}  // namespace gfm

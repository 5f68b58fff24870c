#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfm/annealing.hpp"
#include "gfm/energy.hpp"
#include "gfm/graph.hpp"

namespace gfm {

/// Default parameters derived from graph size and diameter:
/// horizon 100 + 0.1 N, beta = 2 log(1 + t) / diameter, and an intensity
/// lambda (2t + 2) delivering on average `s_star` jumps over the final unit
/// of time.
struct TuningReport {
  double t_max_star = 0.0;
  double b_star = 0.0;
  double s_star = 0.0;
  double lambda_star = 0.0;
  double dt = 0.0;
  std::size_t vertex_count = 0;
  double diameter = 0.0;
};

inline constexpr double kTargetJumpsPerUnit = 1000.0;

/// Individual replacements applied after tuning.
struct ScheduleOverrides {
  std::optional<double> b;
  std::optional<double> lambda;
  std::optional<double> gamma;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::optional<double> window;
  std::optional<QuantumPosition> start;
};

/// Throws ZeroDiameter when the summary has no extent.
TuningReport tuning_report(const GraphSummary& summary);

Schedule schedule_from(const TuningReport& report);

/// Tuned schedule with `overrides` applied field by field, then re-validated.
Schedule auto_tune(const WeightedGraph& graph, const GraphSummary& summary, const ScheduleOverrides& overrides = {});

/// Multiplicative variation of the tuned defaults. The intensity is
/// recomputed from the scaled jump target and horizon.
struct SweepPreset {
  std::string_view name;
  double beta_factor = 1.0;
  double jumps_factor = 1.0;
  double horizon_factor = 1.0;
};

std::span<const SweepPreset> preset_registry();

/// Throws UnknownPreset for names outside the registry.
const SweepPreset& find_preset(std::string_view name);

Schedule apply_preset(const TuningReport& report, const SweepPreset& preset);

/// Non-empty when b * c_star > 1, i.e. the cooling is faster than the
/// landscape's critical depth admits.
std::optional<std::string> admissibility_warning(const Schedule& schedule, const LandscapeEstimate& landscape);

}  // namespace gfm

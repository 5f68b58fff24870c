#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gfm/annealing.hpp"
#include "gfm/bench.hpp"
#include "gfm/energy.hpp"
#include "gfm/graph.hpp"
#include "gfm/tuning.hpp"

namespace gfm {

/// Field order is insertion order, so serialized output is stable.
using Json = nlohmann::ordered_json;

/// Every document carries "schema": "gfm.<kind>/<version>".
inline constexpr int kSchemaVersion = 1;
std::string schema_tag(std::string_view kind);

/// Wall-clock fields are left out unless requested; they are the only
/// non-reproducible part of any result.
struct ReportOptions {
  bool timing = false;
};

Json schedule_json(const WeightedGraph& graph, const Schedule& schedule);
Json validation_json(const WeightedGraph& graph, const GraphSummary& summary);
Json profile_json(const WeightedGraph& graph, const EnergyProfile& profile);
Json tuning_json(const TuningReport& report, const Schedule& schedule, const WeightedGraph& graph);
Json landscape_json(const LandscapeEstimate& estimate, const Schedule& schedule);
Json run_json(const WeightedGraph& graph, const RunResult& run, const Schedule& schedule, std::string_view method,
              const ReportOptions& options = {});
Json bench_json(const WeightedGraph& graph, std::span<const std::pair<std::string, BenchReport>> reports,
                const ReportOptions& options = {});
Json paired_json(const WeightedGraph& graph, const PairedReport& report);

/// One row per replication: preset, schedule columns, seed, estimate label,
/// success, max frequency (and wall time when requested).
void write_bench_csv(std::ostream& out, const WeightedGraph& graph,
                     std::span<const std::pair<std::string, BenchReport>> reports, const ReportOptions& options = {});

/// Tidy rows (preset, replication, vertex, frequency) for every vertex with
/// non-zero occupation.
void write_frequency_csv(std::ostream& out, const WeightedGraph& graph,
                         std::span<const std::pair<std::string, BenchReport>> reports);

/// One row per jump: time, index, position after the jump (edge endpoints
/// and coordinate), target label, fraction.
void write_trace_csv(std::ostream& out, const WeightedGraph& graph, std::span<const JumpRecord> jumps);

/// Round-trip shortest decimal form, identical on every platform.
std::string format_real(double x);

}  // namespace gfm

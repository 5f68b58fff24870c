#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfm/annealing.hpp"
#include "gfm/energy.hpp"
#include "gfm/tuning.hpp"

namespace gfm {

struct ReplicationRecord {
  std::uint64_t seed = 0;
  VertexId estimate = 0;
  double max_frequency = 0.0;
  double wall_time = 0.0;
  bool success = false;
  std::vector<double> frequencies;
};

/// Monte-Carlo summary over R seeded replications. Error rate counts
/// estimates outside the exact argmin set.
struct BenchReport {
  std::size_t replications = 0;
  std::vector<ReplicationRecord> records;
  double error_rate = 0.0;
  double median_max_frequency = 0.0;
  double average_time = 0.0;
  Schedule schedule;
  std::vector<VertexId> ground_truth;
};

struct BenchOptions {
  /// Concurrent replications; 0 picks the hardware concurrency. Results do
  /// not depend on this value.
  unsigned workers = 1;
};

/// Runs seeds base_seed .. base_seed + R - 1 against the exhaustive oracle.
BenchReport bench(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                  std::size_t replications, std::uint64_t base_seed, const BenchOptions& options = {});

/// Same, with the ground truth supplied (shared across a sweep).
BenchReport bench(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                  std::span<const VertexId> ground_truth, std::size_t replications, std::uint64_t base_seed,
                  const BenchOptions& options = {});

/// One report per named preset, all sharing the geodesic table and seeds.
std::vector<std::pair<std::string, BenchReport>> sweep(const WeightedGraph& graph, const GeodesicTable& table,
                                                       const TuningReport& tuning,
                                                       std::span<const std::string> presets,
                                                       std::size_t replications, std::uint64_t base_seed,
                                                       const BenchOptions& options = {});

struct PairedRecord {
  std::uint64_t seed = 0;
  VertexId annealing_estimate = 0;
  VertexId baseline_estimate = 0;
};

/// Annealing against the Metropolis-Hastings baseline on identical seeds.
struct PairedReport {
  std::size_t replications = 0;
  std::vector<PairedRecord> records;
  double annealing_agreement = 0.0;
  double baseline_agreement = 0.0;
  Schedule schedule;
  std::vector<VertexId> ground_truth;
};

PairedReport baseline_compare(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                              std::size_t replications, std::uint64_t base_seed, const BenchOptions& options = {});

/// Median of the per-replication maximum frequencies.
double median(std::vector<double> values);

}  // namespace gfm

#include "gfm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "gfm/error.hpp"

namespace gfm {

namespace {

void require_replications(std::size_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidReplicationCount, "at least one replication is required");
}

// Calls job(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any job is rethrown on the caller.
template <class Job>
void for_each_index(std::size_t count, unsigned workers, Job job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            job(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

bool contains(std::span<const VertexId> set, VertexId v) { return std::find(set.begin(), set.end(), v) != set.end(); }

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

BenchReport bench(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                  std::size_t replications, std::uint64_t base_seed, const BenchOptions& options) {
  const EnergyProfile truth = exact_barycenter(graph, table);
  return bench(graph, table, schedule, truth.argmin, replications, base_seed, options);
}

BenchReport bench(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                  std::span<const VertexId> ground_truth, std::size_t replications, std::uint64_t base_seed,
                  const BenchOptions& options) {
  require_replications(replications);
  validate(schedule, graph);

  BenchReport report;
  report.replications = replications;
  report.schedule = schedule;
  report.ground_truth.assign(ground_truth.begin(), ground_truth.end());
  report.records.resize(replications);

  for_each_index(replications, options.workers, [&](std::size_t i) {
    const std::uint64_t seed = base_seed + i;
    RunResult run = run_annealing(graph, table, schedule, seed);
    auto& rec = report.records[i];
    rec.seed = seed;
    rec.estimate = run.estimate;
    rec.max_frequency = run.max_frequency;
    rec.wall_time = run.wall_time;
    rec.success = contains(ground_truth, run.estimate);
    rec.frequencies = std::move(run.frequencies);
  });

  std::size_t failures = 0;
  double time = 0.0;
  std::vector<double> peaks;
  peaks.reserve(replications);
  for (const auto& rec : report.records) {
    if (!rec.success) ++failures;
    time += rec.wall_time;
    peaks.push_back(rec.max_frequency);
  }
  report.error_rate = static_cast<double>(failures) / static_cast<double>(replications);
  report.median_max_frequency = median(std::move(peaks));
  report.average_time = time / static_cast<double>(replications);
  return report;
}

std::vector<std::pair<std::string, BenchReport>> sweep(const WeightedGraph& graph, const GeodesicTable& table,
                                                       const TuningReport& tuning,
                                                       std::span<const std::string> presets,
                                                       std::size_t replications, std::uint64_t base_seed,
                                                       const BenchOptions& options) {
  // Resolve every name before running anything.
  std::vector<const SweepPreset*> resolved;
  for (const auto& name : presets) resolved.push_back(&find_preset(name));

  std::vector<std::pair<std::string, BenchReport>> out;
  if (resolved.empty()) return out;
  const EnergyProfile truth = exact_barycenter(graph, table);
  for (const SweepPreset* preset : resolved) {
    out.emplace_back(std::string(preset->name), bench(graph, table, apply_preset(tuning, *preset), truth.argmin,
                                                      replications, base_seed, options));
  }
  return out;
}

PairedReport baseline_compare(const WeightedGraph& graph, const GeodesicTable& table, const Schedule& schedule,
                              std::size_t replications, std::uint64_t base_seed, const BenchOptions& options) {
  require_replications(replications);
  validate(schedule, graph);
  const EnergyProfile truth = exact_barycenter(graph, table);

  PairedReport report;
  report.replications = replications;
  report.schedule = schedule;
  report.ground_truth = truth.argmin;
  report.records.resize(replications);
  for_each_index(replications, options.workers, [&](std::size_t i) {
    const std::uint64_t seed = base_seed + i;
    report.records[i] = {seed, run_annealing(graph, table, schedule, seed).estimate,
                         run_mh_baseline(graph, table, schedule, seed).estimate};
  });

  std::size_t annealing_hits = 0;
  std::size_t baseline_hits = 0;
  for (const auto& rec : report.records) {
    if (contains(truth.argmin, rec.annealing_estimate)) ++annealing_hits;
    if (contains(truth.argmin, rec.baseline_estimate)) ++baseline_hits;
  }
  report.annealing_agreement = static_cast<double>(annealing_hits) / static_cast<double>(replications);
  report.baseline_agreement = static_cast<double>(baseline_hits) / static_cast<double>(replications);
  return report;
}

}  // namespace gfm

// Command-line front end: graph validation, exact barycenters, tuning,
// single runs, replicated benchmarks and synthetic graph generation.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gfm/annealing.hpp"
#include "gfm/bench.hpp"
#include "gfm/energy.hpp"
#include "gfm/error.hpp"
#include "gfm/io.hpp"
#include "gfm/report.hpp"
#include "gfm/shortest_paths.hpp"
#include "gfm/tuning.hpp"

namespace fs = std::filesystem;

namespace {

struct GraphArgs {
  std::string edges;
  std::optional<std::string> nu;
  std::optional<std::string> cache;
  gfm::LengthMode mode = gfm::LengthMode::Lengths;
};

struct ScheduleArgs {
  std::optional<double> b, lambda, gamma, t_max, dt, window;
};

void add_graph_args(CLI::App* cmd, GraphArgs& g, bool with_cache) {
  cmd->add_option("edges", g.edges, "Edge list: 'u v [w]' per line")->required()->check(CLI::ExistingFile);
  cmd->add_option("--nu", g.nu, "Node masses: 'label mass' per line")->check(CLI::ExistingFile);
  cmd->add_option("--mode", g.mode, "How the third column is read")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, gfm::LengthMode>{{"lengths", gfm::LengthMode::Lengths},
                                                 {"coauthor-counts", gfm::LengthMode::CoauthorCounts}},
          CLI::ignore_case));
  if (with_cache) {
    cmd->add_option("--cache", g.cache, "Distance cache written by 'distances'")->check(CLI::ExistingFile);
  }
}

void add_schedule_args(CLI::App* cmd, ScheduleArgs& s) {
  cmd->add_option("--b", s.b, "Cooling constant in beta_t = b log(1 + t)");
  cmd->add_option("--lambda", s.lambda, "Jump intensity scale");
  cmd->add_option("--gamma", s.gamma, "Jump intensity exponent");
  cmd->add_option("--tmax", s.t_max, "Time horizon");
  cmd->add_option("--dt", s.dt, "Brownian step variance");
  cmd->add_option("--window", s.window, "Trailing fraction of the horizon used for occupation");
}

gfm::ScheduleOverrides overrides_of(const ScheduleArgs& s) {
  gfm::ScheduleOverrides o;
  o.b = s.b;
  o.lambda = s.lambda;
  o.gamma = s.gamma;
  o.t_max = s.t_max;
  o.dt = s.dt;
  o.window = s.window;
  return o;
}

gfm::WeightedGraph load(const GraphArgs& g) {
  std::optional<fs::path> nu;
  if (g.nu) nu = *g.nu;
  return gfm::load_graph(g.edges, nu, g.mode);
}

gfm::GeodesicTable distances_for(const gfm::WeightedGraph& graph, const GraphArgs& g) {
  if (!g.cache) return gfm::all_pairs(graph);
  auto table = gfm::load_distance_cache(fs::path(*g.cache));
  if (table.size() != graph.vertex_count()) {
    throw gfm::Error(gfm::ErrorKind::DimensionMismatch, "cache holds " + std::to_string(table.size()) +
                                                            " vertices, graph has " +
                                                            std::to_string(graph.vertex_count()));
  }
  return table;
}

void print(const gfm::Json& doc) { std::cout << doc.dump(2) << '\n'; }

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gfm::Error(gfm::ErrorKind::Io, "cannot write " + path);
  return out;
}

bool has_extension(const std::string& path, std::string_view ext) {
  return fs::path(path).extension() == ext;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barycenters of weighted graphs by homogenized simulated annealing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gfm 1.0");

  GraphArgs graph_args;
  ScheduleArgs sched_args;
  gfm::ReportOptions report_opts;

  auto* validate_cmd = app.add_subcommand("validate", "Parse a graph and report its invariants");
  add_graph_args(validate_cmd, graph_args, false);

  std::string cache_out;
  auto* distances_cmd = app.add_subcommand("distances", "Compute all-pairs geodesics and write a binary cache");
  add_graph_args(distances_cmd, graph_args, false);
  distances_cmd->add_option("-o,--output", cache_out, "Cache file")->required();

  auto* exact_cmd = app.add_subcommand("exact", "Exhaustive energy of every vertex and the argmin set");
  add_graph_args(exact_cmd, graph_args, true);

  auto* tune_cmd = app.add_subcommand("tune", "Default schedule derived from graph size and diameter");
  add_graph_args(tune_cmd, graph_args, true);

  double resolution = 0.0;
  auto* cstar_cmd = app.add_subcommand("cstar", "Estimate the critical depth of the energy landscape");
  add_graph_args(cstar_cmd, graph_args, true);
  cstar_cmd->add_option("--resolution", resolution, "Sampling step along edges")->required();

  std::uint64_t seed = 1;
  std::optional<std::string> trace_path;
  auto* run_cmd = app.add_subcommand("run", "One annealing run");
  add_graph_args(run_cmd, graph_args, true);
  add_schedule_args(run_cmd, sched_args);
  run_cmd->add_option("--seed", seed, "Random seed");
  run_cmd->add_option("--trace", trace_path, "Write every jump to this CSV file");
  run_cmd->add_flag("--timing", report_opts.timing, "Include wall-clock time");

  auto* mh_cmd = app.add_subcommand("mh", "One Metropolis-Hastings baseline run");
  add_graph_args(mh_cmd, graph_args, true);
  add_schedule_args(mh_cmd, sched_args);
  mh_cmd->add_option("--seed", seed, "Random seed");
  mh_cmd->add_flag("--timing", report_opts.timing, "Include wall-clock time");

  std::size_t reps = 0;
  std::vector<std::string> presets;
  unsigned workers = 1;
  std::optional<std::string> out_path;
  std::optional<std::string> freq_path;
  auto* bench_cmd = app.add_subcommand("bench", "Replicated runs scored against the exact barycenter");
  add_graph_args(bench_cmd, graph_args, true);
  add_schedule_args(bench_cmd, sched_args);
  bench_cmd->add_option("--reps", reps, "Number of replications")->required();
  bench_cmd->add_option("--preset", presets, "Named schedule variation (repeatable)");
  bench_cmd->add_option("--seed", seed, "First seed; replication i uses seed + i");
  bench_cmd->add_option("--workers", workers, "Concurrent replications (0: all cores)")->envname("GFM_WORKERS");
  bench_cmd->add_option("--out", out_path, "Write the report to a .csv or .json file instead of stdout");
  bench_cmd->add_option("--frequencies", freq_path, "Write tidy per-vertex frequencies to this CSV file");
  bench_cmd->add_flag("--timing", report_opts.timing, "Include wall-clock times");

  auto* compare_cmd = app.add_subcommand("compare", "Annealing and the baseline on identical seeds");
  add_graph_args(compare_cmd, graph_args, true);
  add_schedule_args(compare_cmd, sched_args);
  compare_cmd->add_option("--reps", reps, "Number of replications")->required();
  compare_cmd->add_option("--seed", seed, "First seed");
  compare_cmd->add_option("--workers", workers, "Concurrent replications (0: all cores)")->envname("GFM_WORKERS");

  std::size_t gen_n = 100, gen_deg = 6, gen_bridges = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Synthetic graph generators");
  gen_cmd->require_subcommand(1);
  auto* two_cluster_cmd = gen_cmd->add_subcommand("two-cluster", "Two clusters joined by a few bridges");
  two_cluster_cmd->add_option("--n", gen_n, "Vertices per cluster");
  two_cluster_cmd->add_option("--deg", gen_deg, "Mean intra-cluster degree");
  two_cluster_cmd->add_option("--bridges", gen_bridges, "Edges between the clusters");
  two_cluster_cmd->add_option("--seed", gen_seed, "Random seed");
  two_cluster_cmd->add_option("-o,--output", gen_out, "Edge list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (two_cluster_cmd->parsed()) {
      const auto graph = gfm::generate_two_cluster(gen_n, gen_deg, gen_bridges, gen_seed);
      auto out = open_output(gen_out);
      gfm::write_edge_list(out, graph);
      return 0;
    }

    const auto graph = load(graph_args);

    if (validate_cmd->parsed()) {
      const auto table = gfm::all_pairs(graph);
      print(gfm::validation_json(graph, gfm::summarize(graph, table)));
      return 0;
    }
    if (distances_cmd->parsed()) {
      gfm::save_distance_cache(fs::path(cache_out), gfm::all_pairs(graph));
      return 0;
    }

    const auto table = distances_for(graph, graph_args);
    const auto summary = gfm::summarize(graph, table);

    if (exact_cmd->parsed()) {
      print(gfm::profile_json(graph, gfm::exact_barycenter(graph, table)));
    } else if (tune_cmd->parsed()) {
      const auto report = gfm::tuning_report(summary);
      print(gfm::tuning_json(report, gfm::schedule_from(report), graph));
    } else if (cstar_cmd->parsed()) {
      const auto estimate = gfm::estimate_cstar(graph, table, resolution);
      const auto schedule = gfm::auto_tune(graph, summary);
      if (const auto warning = gfm::admissibility_warning(schedule, estimate)) {
        std::cerr << "warning: " << *warning << '\n';
      }
      print(gfm::landscape_json(estimate, schedule));
    } else if (run_cmd->parsed()) {
      const auto schedule = gfm::auto_tune(graph, summary, overrides_of(sched_args));
      std::vector<gfm::JumpRecord> jumps;
      gfm::JumpObserver observer;
      if (trace_path) observer = [&](const gfm::JumpRecord& j) { jumps.push_back(j); };
      const auto run = gfm::run_annealing(graph, table, schedule, seed, observer);
      if (trace_path) {
        auto out = open_output(*trace_path);
        gfm::write_trace_csv(out, graph, jumps);
      }
      print(gfm::run_json(graph, run, schedule, "annealing", report_opts));
    } else if (mh_cmd->parsed()) {
      const auto schedule = gfm::auto_tune(graph, summary, overrides_of(sched_args));
      print(gfm::run_json(graph, gfm::run_mh_baseline(graph, table, schedule, seed), schedule, "metropolis-hastings",
                          report_opts));
    } else if (bench_cmd->parsed()) {
      const gfm::BenchOptions options{workers};
      std::vector<std::pair<std::string, gfm::BenchReport>> reports;
      if (presets.empty()) {
        const auto schedule = gfm::auto_tune(graph, summary, overrides_of(sched_args));
        reports.emplace_back("tuned", gfm::bench(graph, table, schedule, reps, seed, options));
      } else {
        reports = gfm::sweep(graph, table, gfm::tuning_report(summary), presets, reps, seed, options);
      }
      if (freq_path) {
        auto out = open_output(*freq_path);
        gfm::write_frequency_csv(out, graph, reports);
      }
      if (out_path && has_extension(*out_path, ".csv")) {
        auto out = open_output(*out_path);
        gfm::write_bench_csv(out, graph, reports, report_opts);
      } else if (out_path) {
        auto out = open_output(*out_path);
        out << gfm::bench_json(graph, reports, report_opts).dump(2) << '\n';
      } else {
        print(gfm::bench_json(graph, reports, report_opts));
      }
    } else if (compare_cmd->parsed()) {
      const auto schedule = gfm::auto_tune(graph, summary, overrides_of(sched_args));
      print(gfm::paired_json(graph, gfm::baseline_compare(graph, table, schedule, reps, seed, {workers})));
    }
    return 0;
  } catch (const gfm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

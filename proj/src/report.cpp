#include "gfm/report.hpp"

#include <array>
#include <charconv>

namespace gfm {

namespace {

Json labels_of(const WeightedGraph& graph, std::span<const VertexId> ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(graph.label(v));
  return out;
}

Json position_json(const WeightedGraph& graph, const QuantumPosition& x) {
  const Edge& e = graph.edge(x.edge);
  return Json{{"tail", graph.label(e.tail)}, {"head", graph.label(e.head)}, {"coord", x.coord}};
}

Json frequency_map(const WeightedGraph& graph, std::span<const double> frequencies) {
  Json out = Json::object();
  for (VertexId v = 0; v < frequencies.size(); ++v) {
    if (frequencies[v] > 0.0) out[graph.label(v)] = frequencies[v];
  }
  return out;
}

// Labels are free-form tokens; quote only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string schema_tag(std::string_view kind) {
  return "gfm." + std::string(kind) + "/" + std::to_string(kSchemaVersion);
}

Json schedule_json(const WeightedGraph& graph, const Schedule& s) {
  Json out{{"b", s.b}, {"lambda", s.lambda}, {"gamma", s.gamma}, {"t_max", s.t_max}, {"dt", s.dt},
           {"window", s.window}};
  out["start"] = s.start ? position_json(graph, *s.start) : Json(nullptr);
  return out;
}

Json validation_json(const WeightedGraph& graph, const GraphSummary& summary) {
  double mass_min = graph.node_weight(0);
  std::size_t support = 0;
  for (double w : graph.node_weights()) {
    mass_min = std::min(mass_min, w);
    if (w > 0.0) ++support;
  }
  return Json{{"schema", schema_tag("validation")},
              {"valid", true},
              {"vertex_count", summary.vertex_count},
              {"edge_count", summary.edge_count},
              {"connected", true},
              {"diameter", summary.diameter},
              {"perimeter", summary.perimeter},
              {"min_edge_length", summary.min_edge_length},
              {"max_edge_length", summary.max_edge_length},
              {"mass_support", support},
              {"min_mass", mass_min}};
}

Json profile_json(const WeightedGraph& graph, const EnergyProfile& profile) {
  Json energies = Json::object();
  for (VertexId v = 0; v < profile.energies.size(); ++v) energies[graph.label(v)] = profile.energies[v];
  return Json{{"schema", schema_tag("energy_profile")},
              {"argmin", labels_of(graph, profile.argmin)},
              {"min_energy", profile.min_energy},
              {"max_energy", profile.max_energy},
              {"energies", std::move(energies)}};
}

Json tuning_json(const TuningReport& r, const Schedule& schedule, const WeightedGraph& graph) {
  return Json{{"schema", schema_tag("tuning")},
              {"vertex_count", r.vertex_count},
              {"diameter", r.diameter},
              {"t_max_star", r.t_max_star},
              {"b_star", r.b_star},
              {"s_star", r.s_star},
              {"lambda_star", r.lambda_star},
              {"dt", r.dt},
              {"schedule", schedule_json(graph, schedule)}};
}

Json landscape_json(const LandscapeEstimate& e, const Schedule& schedule) {
  Json out{{"schema", schema_tag("landscape")},
           {"c_star", e.c_star},
           {"max_elevation", e.max_elevation},
           {"resolution", e.resolution},
           {"slack", e.slack},
           {"point_count", e.point_count}};
  out["suggested_b"] = e.suggested_b ? Json(*e.suggested_b) : Json(nullptr);
  out["tuned_b"] = schedule.b;
  const auto warning = admissibility_warning(schedule, e);
  out["warning"] = warning ? Json(*warning) : Json(nullptr);
  return out;
}

Json run_json(const WeightedGraph& graph, const RunResult& run, const Schedule& schedule, std::string_view method,
              const ReportOptions& options) {
  Json out{{"schema", schema_tag("run")},
           {"method", method},
           {"seed", run.seed},
           {"estimate", graph.label(run.estimate)},
           {"max_frequency", run.max_frequency},
           {"jump_count", run.jump_count}};
  if (options.timing) out["wall_time"] = run.wall_time;
  out["schedule"] = schedule_json(graph, schedule);
  out["frequencies"] = frequency_map(graph, run.frequencies);
  return out;
}

Json bench_json(const WeightedGraph& graph, std::span<const std::pair<std::string, BenchReport>> reports,
                const ReportOptions& options) {
  Json list = Json::array();
  for (const auto& [name, r] : reports) {
    Json records = Json::array();
    for (const auto& rec : r.records) {
      Json row{{"seed", rec.seed},
               {"estimate", graph.label(rec.estimate)},
               {"success", rec.success},
               {"max_frequency", rec.max_frequency}};
      if (options.timing) row["wall_time"] = rec.wall_time;
      records.push_back(std::move(row));
    }
    Json entry{{"preset", name},
               {"replications", r.replications},
               {"error_rate", r.error_rate},
               {"median_max_frequency", r.median_max_frequency}};
    if (options.timing) entry["average_time"] = r.average_time;
    entry["ground_truth"] = labels_of(graph, r.ground_truth);
    entry["schedule"] = schedule_json(graph, r.schedule);
    entry["records"] = std::move(records);
    list.push_back(std::move(entry));
  }
  return Json{{"schema", schema_tag("bench")}, {"reports", std::move(list)}};
}

Json paired_json(const WeightedGraph& graph, const PairedReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) {
    records.push_back({{"seed", rec.seed},
                       {"annealing", graph.label(rec.annealing_estimate)},
                       {"baseline", graph.label(rec.baseline_estimate)}});
  }
  return Json{{"schema", schema_tag("paired")},
              {"replications", r.replications},
              {"annealing_agreement", r.annealing_agreement},
              {"baseline_agreement", r.baseline_agreement},
              {"ground_truth", labels_of(graph, r.ground_truth)},
              {"schedule", schedule_json(graph, r.schedule)},
              {"records", std::move(records)}};
}

void write_bench_csv(std::ostream& out, const WeightedGraph& graph,
                     std::span<const std::pair<std::string, BenchReport>> reports, const ReportOptions& options) {
  out << "# " << schema_tag("bench_csv") << '\n';
  out << "preset,b,lambda,gamma,t_max,dt,window,seed,estimate,success,max_frequency";
  if (options.timing) out << ",wall_time";
  out << '\n';
  for (const auto& [name, r] : reports) {
    const Schedule& s = r.schedule;
    const std::string prefix = csv_field(name) + ',' + format_real(s.b) + ',' + format_real(s.lambda) + ',' +
                               format_real(s.gamma) + ',' + format_real(s.t_max) + ',' + format_real(s.dt) + ',' +
                               format_real(s.window) + ',';
    for (const auto& rec : r.records) {
      out << prefix << rec.seed << ',' << csv_field(graph.label(rec.estimate)) << ',' << (rec.success ? 1 : 0)
          << ',' << format_real(rec.max_frequency);
      if (options.timing) out << ',' << format_real(rec.wall_time);
      out << '\n';
    }
  }
}

void write_frequency_csv(std::ostream& out, const WeightedGraph& graph,
                         std::span<const std::pair<std::string, BenchReport>> reports) {
  out << "# " << schema_tag("frequency_csv") << '\n';
  out << "preset,replication,vertex,frequency\n";
  for (const auto& [name, r] : reports) {
    for (std::size_t i = 0; i < r.records.size(); ++i) {
      const auto& freq = r.records[i].frequencies;
      for (VertexId v = 0; v < freq.size(); ++v) {
        if (freq[v] > 0.0) {
          out << csv_field(name) << ',' << i << ',' << csv_field(graph.label(v)) << ',' << format_real(freq[v])
              << '\n';
        }
      }
    }
  }
}

void write_trace_csv(std::ostream& out, const WeightedGraph& graph, std::span<const JumpRecord> jumps) {
  out << "# " << schema_tag("trace_csv") << '\n';
  out << "t,k,tail,head,coord,target,fraction\n";
  for (const auto& j : jumps) {
    const Edge& e = graph.edge(j.position.edge);
    out << format_real(j.t) << ',' << j.k << ',' << csv_field(graph.label(e.tail)) << ','
        << csv_field(graph.label(e.head)) << ',' << format_real(j.position.coord) << ','
        << csv_field(graph.label(j.target)) << ',' << format_real(j.fraction) << '\n';
  }
}

}  // namespace gfm

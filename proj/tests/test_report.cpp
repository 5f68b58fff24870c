#include <doctest.h>

#include <sstream>

#include "gfm/bench.hpp"
#include "gfm/report.hpp"
#include "gfm/shortest_paths.hpp"
#include "support.hpp"

using namespace gfm;

namespace {

std::vector<std::string> keys(const Json& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Labels chosen so that none of them coincides with an internal id.
WeightedGraph lettered() {
  auto raw = support::coauthors();
  raw.labels = {"ann", "bo", "cy", "di", "ed"};
  return raw.build();
}

Schedule quick(const WeightedGraph& g) {
  const auto t = all_pairs(g);
  ScheduleOverrides o;
  o.t_max = 2.0;
  return auto_tune(g, summarize(g, t), o);
}

}  // namespace

TEST_CASE("schema tags") {
  CHECK(schema_tag("run") == "gfm.run/1");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(1e-300) == "1e-300");
}

TEST_CASE("profile and validation documents") {
  const auto g = lettered();
  const auto t = all_pairs(g);
  const auto p = profile_json(g, exact_barycenter(g, t));
  CHECK(keys(p) == std::vector<std::string>{"schema", "argmin", "min_energy", "max_energy", "energies"});
  CHECK(p["schema"] == "gfm.energy_profile/1");
  CHECK(p["argmin"] == Json::array({"ed"}));
  CHECK(keys(p["energies"]) == std::vector<std::string>{"ann", "bo", "cy", "di", "ed"});
  const auto v = validation_json(g, summarize(g, t));
  CHECK(v["schema"] == "gfm.validation/1");
  CHECK(v["vertex_count"] == 5);
  CHECK(v["diameter"].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("run documents") {
  const auto g = lettered();
  const auto t = all_pairs(g);
  const auto s = quick(g);
  const auto run = run_annealing(g, t, s, 5);
  const auto plain = run_json(g, run, s, "annealing");
  CHECK(keys(plain) ==
        std::vector<std::string>{"schema", "method", "seed", "estimate", "max_frequency", "jump_count", "schedule",
                                 "frequencies"});
  CHECK(plain["estimate"] == g.label(run.estimate));
  CHECK(keys(plain["schedule"]) == std::vector<std::string>{"b", "lambda", "gamma", "t_max", "dt", "window", "start"});
  CHECK(plain["schedule"]["start"].is_null());
  double total = 0.0;
  for (const auto& [label, f] : plain["frequencies"].items()) {
    CHECK(label.size() >= 2);
    total += f.get<double>();
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(plain.dump() == run_json(g, run_annealing(g, t, s, 5), s, "annealing").dump());

  const auto timed = run_json(g, run, s, "annealing", {.timing = true});
  CHECK(timed.contains("wall_time"));
  CHECK_FALSE(plain.contains("wall_time"));

  Schedule fixed = s;
  fixed.start = vertex_position(g, 2);
  const auto start = schedule_json(g, fixed)["start"];
  CHECK(start.is_object());
  CHECK(keys(start) == std::vector<std::string>{"tail", "head", "coord"});
}

TEST_CASE("bench documents and tables") {
  const auto g = lettered();
  const auto t = all_pairs(g);
  const auto s = quick(g);
  const std::vector<std::pair<std::string, BenchReport>> reports{{"tuned", bench(g, t, s, 3, 10)}};

  const auto doc = bench_json(g, reports);
  CHECK(doc["schema"] == "gfm.bench/1");
  const auto& r = doc["reports"][0];
  CHECK(keys(r) == std::vector<std::string>{"preset", "replications", "error_rate", "median_max_frequency",
                                            "ground_truth", "schedule", "records"});
  CHECK(r["ground_truth"] == Json::array({"ed"}));
  CHECK(r["records"].size() == 3);
  CHECK(r["records"][0]["seed"] == 10);
  CHECK_FALSE(r["records"][0].contains("wall_time"));
  CHECK(bench_json(g, reports, {.timing = true})["reports"][0].contains("average_time"));

  std::ostringstream csv;
  write_bench_csv(csv, g, reports);
  auto rows = lines(csv.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "# gfm.bench_csv/1");
  CHECK(rows[1] == "preset,b,lambda,gamma,t_max,dt,window,seed,estimate,success,max_frequency");
  CHECK(rows[2].rfind("tuned,", 0) == 0);

  std::ostringstream timed;
  write_bench_csv(timed, g, reports, {.timing = true});
  CHECK(lines(timed.str())[1].ends_with(",wall_time"));

  std::ostringstream freq;
  write_frequency_csv(freq, g, reports);
  rows = lines(freq.str());
  CHECK(rows[1] == "preset,replication,vertex,frequency");
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(rows[i].rfind("tuned,", 0) == 0);
}

TEST_CASE("trace rows") {
  const auto g = lettered();
  const auto t = all_pairs(g);
  const auto s = quick(g);
  std::vector<JumpRecord> jumps;
  run_annealing(g, t, s, 3, [&](const JumpRecord& j) { jumps.push_back(j); });
  REQUIRE_FALSE(jumps.empty());
  std::ostringstream out;
  write_trace_csv(out, g, jumps);
  const auto rows = lines(out.str());
  CHECK(rows[0] == "# gfm.trace_csv/1");
  CHECK(rows[1] == "t,k,tail,head,coord,target,fraction");
  CHECK(rows.size() == jumps.size() + 2);
}

TEST_CASE("labels needing quotes") {
  const auto g = WeightedGraph::build(std::vector<EdgeSpec>{{0, 1, 1.0}}, {}, {"a,b", "say \"hi\""});
  const auto t = all_pairs(g);
  std::vector<std::pair<std::string, BenchReport>> reports{{"p", bench(g, t, quick(g), 1, 1)}};
  std::ostringstream out;
  write_frequency_csv(out, g, reports);
  const auto text = out.str();
  CHECK((text.find("\"a,b\"") != std::string::npos || text.find("\"say \"\"hi\"\"\"") != std::string::npos));
}

#include <doctest.h>

#include <algorithm>

#include "gfm/bench.hpp"
#include "gfm/error.hpp"
#include "gfm/io.hpp"
#include "support.hpp"

using namespace gfm;

namespace {

Schedule quick_schedule(const WeightedGraph& g) {
  ScheduleOverrides o;
  o.t_max = 20.0;
  o.lambda = 20.0;
  const auto t = all_pairs(g);
  return auto_tune(g, summarize(g, t), o);
}

void check_consistent(const BenchReport& r) {
  REQUIRE(r.records.size() == r.replications);
  std::size_t failures = 0;
  std::vector<double> peaks;
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    if (i > 0) CHECK(rec.seed > r.records[i - 1].seed);
    CHECK(rec.success == (std::find(r.ground_truth.begin(), r.ground_truth.end(), rec.estimate) !=
                          r.ground_truth.end()));
    if (!rec.success) ++failures;
    peaks.push_back(rec.max_frequency);
  }
  CHECK(r.error_rate == doctest::Approx(static_cast<double>(failures) / r.replications));
  CHECK(r.error_rate >= 0.0);
  CHECK(r.error_rate <= 1.0);
  CHECK(r.median_max_frequency == median(peaks));
  CHECK(r.median_max_frequency >= 0.0);
  CHECK(r.median_max_frequency <= 1.0);
}

bool same_records(const BenchReport& a, const BenchReport& b) {
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.seed != y.seed || x.estimate != y.estimate || x.max_frequency != y.max_frequency ||
        x.frequencies != y.frequencies || x.success != y.success)
      return false;
  }
  return a.error_rate == b.error_rate && a.median_max_frequency == b.median_max_frequency;
}

}  // namespace

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  CHECK(median({0.7}) == 0.7);
}

TEST_CASE("bench aggregates its records") {
  const auto g = support::barbell(2.0).build();
  const auto t = all_pairs(g);
  const auto s = quick_schedule(g);
  const auto r = bench(g, t, s, 12, 100);
  check_consistent(r);
  CHECK(r.records.front().seed == 100);
  CHECK(r.records.back().seed == 111);
  CHECK(r.ground_truth == exact_barycenter(g, t).argmin);
  CHECK(r.schedule == s);

  const auto single = bench(g, t, s, 1, 7);
  CHECK((single.error_rate == 0.0 || single.error_rate == 1.0));
  const auto run = run_annealing(g, t, s, 7);
  CHECK(single.records[0].estimate == run.estimate);
  CHECK(single.records[0].frequencies == run.frequencies);
}

TEST_CASE("bench is deterministic across worker counts") {
  const auto g = support::barbell(2.0).build();
  const auto t = all_pairs(g);
  const auto s = quick_schedule(g);
  const auto serial = bench(g, t, s, 10, 5, {1});
  CHECK(same_records(serial, bench(g, t, s, 10, 5, {1})));
  CHECK(same_records(serial, bench(g, t, s, 10, 5, {3})));
  CHECK(same_records(serial, bench(g, t, s, 10, 5, {0})));
}

TEST_CASE("replication count") {
  const auto g = support::path(3).build();
  const auto t = all_pairs(g);
  const auto s = quick_schedule(g);
  try {
    bench(g, t, s, 0, 1);
    FAIL("expected InvalidReplicationCount");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidReplicationCount);
  }
  CHECK_THROWS_AS(baseline_compare(g, t, s, 0, 1), Error);
}

TEST_CASE("invalid schedule propagates") {
  const auto g = support::path(3).build();
  const auto t = all_pairs(g);
  Schedule s = quick_schedule(g);
  s.dt = 1.0;
  CHECK_THROWS_AS(bench(g, t, s, 2, 1), Error);
}

TEST_CASE("sweep") {
  const auto g = support::barbell(2.0).build();
  const auto t = all_pairs(g);
  auto report = tuning_report(summarize(g, t));
  report.t_max_star = 20.0;
  SUBCASE("empty preset list") { CHECK(sweep(g, t, report, {}, 5, 1).empty()); }
  SUBCASE("unknown preset is rejected before running") {
    const std::vector<std::string> names{"beta", "nope"};
    try {
      sweep(g, t, report, names, 5, 1);
      FAIL("expected UnknownPreset");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownPreset);
    }
  }
  SUBCASE("named reports in order") {
    const std::vector<std::string> names{"half-beta", "double-beta"};
    const auto out = sweep(g, t, report, names, 4, 1);
    REQUIRE(out.size() == 2);
    CHECK(out[0].first == "half-beta");
    CHECK(out[1].second.schedule.b == doctest::Approx(2 * report.b_star));
    for (const auto& [name, r] : out) check_consistent(r);
  }
}

TEST_CASE("stronger cooling does not hurt on a two-cluster graph") {
  const auto g = generate_two_cluster(100, 6, 3, 42);
  const auto t = all_pairs(g);
  REQUIRE(exact_barycenter(g, t).argmin.size() == 1);
  const std::vector<std::string> names{"beta", "double-beta"};
  const auto out = sweep(g, t, tuning_report(summarize(g, t)), names, 100, 1, {0});
  MESSAGE("error at beta* " << out[0].second.error_rate << ", at 2 beta* " << out[1].second.error_rate);
  CHECK(out[1].second.error_rate <= out[0].second.error_rate + 0.05);
}

TEST_CASE("paired comparison") {
  SUBCASE("mass on one vertex") {
    const std::array<EdgeSpec, 3> e{{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}};
    const std::array<double, 4> w{0, 0, 1, 0};
    const auto g = WeightedGraph::build(e, w);
    const auto t = all_pairs(g);
    ScheduleOverrides o;
    o.t_max = 30.0;
    o.dt = 1e-3;
    const auto s = auto_tune(g, summarize(g, t), o);
    const auto r = baseline_compare(g, t, s, 10, 1);
    CHECK(r.annealing_agreement == 1.0);
    CHECK(r.baseline_agreement == 1.0);
    CHECK(r.ground_truth == std::vector<VertexId>{2});
  }
  SUBCASE("records pair identical seeds") {
    const auto g = support::barbell(2.0).build();
    const auto t = all_pairs(g);
    const auto s = quick_schedule(g);
    const auto r = baseline_compare(g, t, s, 3, 9, {2});
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(r.records[i].seed == 9 + i);
      CHECK(r.records[i].annealing_estimate == run_annealing(g, t, s, 9 + i).estimate);
      CHECK(r.records[i].baseline_estimate == run_mh_baseline(g, t, s, 9 + i).estimate);
    }
  }
}

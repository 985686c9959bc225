#include <doctest.h>

#include "icnsim/metrics.hpp"

using namespace icnsim;

TEST_CASE("mean and population stddev") {
  const std::vector<double> flat{5, 5, 5};
  CHECK(mean_stddev(flat).mean == 5);
  CHECK(mean_stddev(flat).stddev == 0);
  const std::vector<double> two{0, 10};
  CHECK(mean_stddev(two).mean == 5);
  CHECK(mean_stddev(two).stddev == 5);
  CHECK(mean_stddev(std::vector<double>{}).count == 0);
}

TEST_CASE("summarize excludes warm-up samples and non-Data delays") {
  RunResult r;
  r.scenario.warmup = 1.0;
  r.scenario.plane = Plane::Adn;
  r.samples.push_back({0.5, {100, 100}, {0, 0}});
  r.samples.push_back({1.0, {2, 4}, {1, 1}});
  r.samples.push_back({1.1, {2, 4}, {1, 1}});
  auto req = [](TraceId id, SimTime issue, Outcome o, SimTime done) {
    RequestRecord x;
    x.id = id;
    x.endpoint = 0;
    x.issue = issue;
    x.outcome = o;
    x.done = done;
    return x;
  };
  r.initial_topology.add_node("r0", NodeKind::Router);
  r.requests = {req(1, 0.2, Outcome::Data, 0.3), req(2, 1.5, Outcome::Data, 1.7),
                req(3, 1.6, Outcome::Data, 2.0), req(4, 1.7, Outcome::Nack, 1.8)};
  const auto row = summarize(r);
  CHECK(row.avg_table_size == doctest::Approx(3));
  CHECK(row.stddev_table_size == doctest::Approx(1));
  CHECK(row.avg_delay == doctest::Approx(0.3));
  CHECK(row.stddev_delay == doctest::Approx(0.1));
  CHECK(row.requests == 3);
  CHECK(row.nack_rate == doctest::Approx(1.0 / 3));
  CHECK(row.avg_pending_local == doctest::Approx(1));
}

TEST_CASE("deadlock detection ignores expiries during a genuine partition") {
  RunResult r;
  auto& t = r.initial_topology;
  const auto c = t.add_node("c", NodeKind::Consumer);
  const auto x = t.add_node("x", NodeKind::Router);
  const auto p = t.add_node("p", NodeKind::Producer);
  t.add_link(c, x);
  const auto xp = t.add_link(x, p);
  r.announcements.push_back(Announcement::ndn(p, NamePrefix::parse("/p")));
  RequestRecord a;
  a.id = 1;
  a.endpoint = c;
  a.name = ContentName::parse("/p/o1");
  a.issue = 1;
  a.done = 5;
  a.outcome = Outcome::Expired;
  RequestRecord b = a;
  b.id = 2;
  b.issue = 10;
  b.done = 14;
  r.requests = {a, b};
  r.link_history.push_back({3.0, xp, false});  // cut mid-way through request 1
  r.link_history.push_back({8.0, xp, true});
  CHECK(detect_deadlock(r) == std::vector<TraceId>{2});
}

TEST_CASE("CSV header is fixed") {
  CHECK(summary_csv_header().starts_with(
      "scenario,plane,caching_mode,rate,avg_table_size,stddev,avg_delay,stddev_delay,nack_rate,"
      "deadlocked_requests"));
}

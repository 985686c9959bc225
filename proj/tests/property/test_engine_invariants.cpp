#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "../support/random_cases.hpp"
#include "icnsim/metrics.hpp"
#include "icnsim/simulator.hpp"

using namespace icnsim;

namespace {

std::string summary(const RunResult& run) {
  std::ostringstream out;
  write_requests_csv(out, run, detect_deadlock(run));
  return summary_csv_row(summarize(run)) + "\n" + out.str();
}

}  // namespace

TEST_CASE("engine: identical inputs give byte-identical traces and metrics") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    for (Plane plane : {Plane::Ndn, Plane::Adn}) {
      cases::Options opt;
      opt.plane = plane;
      const auto sc = cases::random_case(seed, opt);
      const auto a = icnsim::run(sc, RunOptions{true, 0});
      const auto b = icnsim::run(sc, RunOptions{true, 0});
      CHECK(a.trace_text() == b.trace_text());
      CHECK(summary(a) == summary(b));
    }
  }
}

TEST_CASE("engine: trace time never goes backwards and every request resolves exactly once") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    for (Plane plane : {Plane::Ndn, Plane::Adn}) {
      cases::Options opt;
      opt.plane = plane;
      const auto run = icnsim::run(cases::random_case(seed, opt), RunOptions{true, 0});
      SimTime last = 0;
      std::map<TraceId, int> endings;
      for (const auto& t : run.trace) {
        CHECK(t.time >= last);
        last = t.time;
        if (t.kind == TraceKind::Deliver || t.kind == TraceKind::Expire) ++endings[t.trace_id];
      }
      for (const auto& r : run.requests) {
        CHECK(r.outcome != Outcome::Pending);
        CHECK(endings[r.id] == 1);
        CHECK(r.done >= r.issue);
      }
    }
  }
}

TEST_CASE("engine: with no caching or failures both planes see the same per-request delay") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    cases::Options opt;
    opt.stale_downs = false;
    opt.multicast = false;
    opt.distinct_names = true;
    opt.uniform_delay = true;
    opt.caching = CachingMode::None;
    opt.plane = Plane::Ndn;
    const auto n = icnsim::run(cases::random_case(seed, opt));
    opt.plane = Plane::Adn;
    const auto a = icnsim::run(cases::random_case(seed, opt));
    REQUIRE(n.requests.size() == a.requests.size());
    for (std::size_t i = 0; i < n.requests.size(); ++i) {
      CHECK(n.requests[i].outcome == Outcome::Data);
      CHECK(a.requests[i].outcome == Outcome::Data);
      // Header sizes differ between the planes, so allow a few microseconds per hop.
      CHECK(std::abs(n.requests[i].delay() - a.requests[i].delay()) < 1e-4);
    }
  }
}

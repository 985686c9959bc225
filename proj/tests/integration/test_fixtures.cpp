#include <doctest.h>

#include <fstream>
#include <sstream>

#include "icnsim/metrics.hpp"
#include "icnsim/scenario.hpp"
#include "icnsim/simulator.hpp"

using namespace icnsim;

namespace {

RunResult run_builtin(const std::string& name) {
  const auto b = find_builtin(name);
  REQUIRE(b.has_value());
  return icnsim::run(parse_scenario(b->text), RunOptions{true, 0});
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ICNSIM_SOURCE_DIR) + "/tests/golden/" + name + ".trace");
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const RunResult& r, TraceKind kind, const std::string& node,
                  const std::string& peer = "") {
  const auto names = r.node_names();
  std::size_t n = 0;
  for (const auto& t : r.trace) {
    if (t.kind != kind || t.node < 0 || names[static_cast<std::size_t>(t.node)] != node) continue;
    if (!peer.empty() && (t.peer < 0 || names[static_cast<std::size_t>(t.peer)] != peer)) continue;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("golden traces") {
  for (const char* name : {"fig4-ndn-deadlock", "fig5-adn", "fig5-adn-retransmit"}) {
    CAPTURE(name);
    CHECK(run_builtin(name).trace_text() == golden(name));
  }
}

TEST_CASE("NDN fixture: stale colors form an Interest loop and every request deadlocks") {
  const auto r = run_builtin("fig4-ndn-deadlock");
  const auto row = summarize(r);
  CHECK(row.requests == 3);
  CHECK(row.expired == 3);
  CHECK(row.deadlocked_requests == 3);
  CHECK(row.data == 0);
  // x -> u -> v -> z -> x: each hop forwarded once, the loop closes by aggregation.
  CHECK(count(r, TraceKind::Forward, "x", "u") == 1);
  CHECK(count(r, TraceKind::Forward, "u", "v") == 1);
  CHECK(count(r, TraceKind::Forward, "v", "z") == 1);
  CHECK(count(r, TraceKind::Forward, "z", "x") == 1);
  CHECK(count(r, TraceKind::Aggregate, "x") + count(r, TraceKind::Aggregate, "z") +
            count(r, TraceKind::Aggregate, "v") >= 3);
}

TEST_CASE("ADN fixture: the same failures end in one NACK and two deliveries") {
  const auto r = run_builtin("fig5-adn");
  const auto row = summarize(r);
  CHECK(row.data == 2);
  CHECK(row.nacks == 1);
  CHECK(row.expired == 0);
  CHECK(row.deadlocked_requests == 0);
  CHECK(count(r, TraceKind::Nack, "x", "z") == 1);
  CHECK(count(r, TraceKind::Aggregate, "u", "v") == 1);
  CHECK(count(r, TraceKind::Forward, "w", "n") == 1);  // one Interest reaches the anchor
  CHECK(count(r, TraceKind::DataFwd, "u") == 2);        // fans out to x and v
}

TEST_CASE("ADN fixture: after routes are recomputed the retransmission succeeds") {
  const auto r = run_builtin("fig5-adn-retransmit");
  REQUIRE(r.requests.size() == 4);
  CHECK(r.requests[1].outcome == Outcome::Nack);
  CHECK(r.requests[3].outcome == Outcome::Data);
  CHECK(count(r, TraceKind::Forward, "z", "v") == 1);
}

TEST_CASE("every builtin parses, validates and round-trips through the canonical form") {
  for (const auto& b : builtin_scenarios()) {
    CAPTURE(b.name);
    const auto s = parse_scenario(b.text);
    CHECK_NOTHROW(build_network(s));
    CHECK(emit_scenario(parse_scenario(emit_scenario(s))) == emit_scenario(s));
    CHECK_FALSE(b.description.empty());
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "icnsim/scenario.hpp"

using namespace icnsim;

namespace {

std::vector<ParseIssue> issues_of(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e.issues();
  }
  return {};
}

bool mentions(const std::vector<ParseIssue>& issues, int line, std::string_view needle) {
  return std::any_of(issues.begin(), issues.end(), [&](const ParseIssue& i) {
    return i.line == line && i.message.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("minimal file fills documented defaults") {
  const auto s = parse_scenario("[topology]\nnode = r0\n");
  CHECK(s.plane == Plane::Ndn);
  CHECK(s.caching == CachingMode::Edge);
  CHECK(s.horizon == 60);
  CHECK(s.warmup == 10);
  CHECK(s.sample_interval == doctest::Approx(0.1));
  CHECK(s.pit_lifetime == 4);
  CHECK(s.sat_timeout == 5);
  CHECK(s.cs_capacity == 1000);
  CHECK(s.workload.zipf == doctest::Approx(0.7));
  CHECK(s.workload.catalog == 1000000);
  CHECK(s.scale == 1);
}

TEST_CASE("unknown sections and keys are rejected with their lines") {
  const auto issues = issues_of("[scenario]\nplane = ndn\ncolour = red\n[bogus]\nx = 1\n[topology]\nnode = a\n");
  CHECK(mentions(issues, 3, "unknown key 'colour'"));
  CHECK(mentions(issues, 4, "unknown section"));
}

TEST_CASE("semantic errors: dangling node, unknown link, negative rate, bad values") {
  const auto issues = issues_of(
      "[topology]\n"          // 1
      "node = a\n"            // 2
      "node = b\n"            // 3
      "link = a c\n"          // 4
      "[events]\n"            // 5
      "down = 1 a b\n"        // 6
      "[workload]\n"          // 7
      "rate = -3\n"           // 8
      "zipf = abc\n");        // 9
  CHECK(mentions(issues, 4, "unknown node 'c'"));
  CHECK(mentions(issues, 6, "unknown link a-b"));
  CHECK(mentions(issues, 8, "rate must be >= 0"));
  CHECK(mentions(issues, 9, "expected a number"));
}

TEST_CASE("duplicate scalar keys and consumer degree are checked") {
  const auto issues = issues_of("[scenario]\nseed = 1\nseed = 2\n[topology]\nnode = a consumer\nnode = r\n");
  CHECK(mentions(issues, 3, "duplicate key"));
  CHECK(mentions(issues, 5, "exactly one link"));
}

TEST_CASE("the fig4/fig5 fixtures describe the eight-router network") {
  for (const char* name : {"fig4-ndn-deadlock", "fig5-adn"}) {
    const auto s = parse_scenario(find_builtin(name)->text);
    std::set<std::string> routers;
    for (const auto& n : s.topology.nodes) {
      if (n.kind == NodeKind::Router) routers.insert(n.name);
    }
    CHECK(routers == std::set<std::string>{"k", "m", "n", "u", "v", "w", "x", "z"});
    std::set<std::pair<std::string, std::string>> links;
    for (const auto& l : s.topology.links) links.insert(std::minmax(l.a, l.b));
    const std::set<std::pair<std::string, std::string>> expected = {
        {"a", "x"}, {"b", "z"}, {"c", "v"}, {"u", "x"}, {"u", "v"}, {"v", "z"},
        {"x", "z"}, {"k", "x"}, {"m", "v"}, {"u", "w"}, {"n", "w"}, {"S", "n"}};
    CHECK(links == expected);
  }
}

TEST_CASE("emit then parse round-trips every builtin, scaled or not") {
  for (const auto& b : builtin_scenarios()) {
    CAPTURE(b.name);
    const auto s = parse_scenario(b.text);
    const auto text = emit_scenario(s);
    CHECK(emit_scenario(parse_scenario(text)) == text);
    const auto small = scaled(s, 0.25);
    CHECK(emit_scenario(parse_scenario(emit_scenario(small))) == emit_scenario(small));
  }
}

TEST_CASE("full-size sweep at scale 0.25 expands to 16 runs with scaled parameters") {
  const auto s = scaled(parse_scenario(find_builtin("paper-sweep")->text), 0.25);
  CHECK(s.topology.n == 50);
  CHECK(s.topology.side == doctest::Approx(50));
  CHECK(s.workload.catalog == 250000);
  const auto runs = expand_sweep(s);
  CHECK(runs.size() == 16);
  std::set<std::string> names;
  for (const auto& r : runs) {
    names.insert(r.name);
    CHECK(r.sweep.empty());
    CHECK(r.scale == 0.25);
  }
  CHECK(names.size() == 16);
  CHECK(runs.back().workload.rate == doctest::Approx(125));
}

TEST_CASE("build_network: generated mode announces one prefix per router for the plane") {
  auto s = parse_scenario("[topology]\nmode = generated\nn = 10\nside = 20\nradius = 12\n");
  auto net = build_network(s);
  CHECK(net.announcements.size() == 10);
  CHECK(net.announcements.front().kind == Announcement::Kind::NdnPrefix);
  s.plane = Plane::Adn;
  net = build_network(s);
  CHECK(net.announcements.front().kind == Announcement::Kind::AdnAnchor);
}

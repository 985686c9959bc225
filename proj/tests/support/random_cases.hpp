#pragma once
// Randomized explicit-topology scenarios for the property suites and acceptance.

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "icnsim/scenario.hpp"

namespace cases {

using namespace icnsim;

struct Options {
  Plane plane = Plane::Adn;
  int min_routers = 10;
  int max_routers = 50;
  bool stale_downs = true;   // links fail before traffic; routes are not recomputed
  bool multicast = true;
  bool distinct_names = false;  // every request asks for a fresh object
  CachingMode caching = CachingMode::Edge;
  bool uniform_delay = false;  // every link 5 ms, so hop-shortest paths tie on delay too
};

inline std::string r(int i) { return "r" + std::to_string(i); }

inline Scenario random_case(std::uint64_t seed, const Options& opt = {}) {
  std::mt19937_64 gen(seed);
  auto pick = [&](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0, 1)(gen);
  };

  Scenario s;
  s.name = "case-" + std::to_string(seed);
  s.plane = opt.plane;
  s.caching = opt.caching;
  s.seed = seed;
  s.horizon = 10;
  s.warmup = 0;
  s.sample_interval = 0.25;
  s.local_producers = false;
  s.topology.generated = false;

  const int n = pick(opt.min_routers, opt.max_routers);
  for (int i = 0; i < n; ++i) s.topology.nodes.push_back({r(i), NodeKind::Router});
  std::set<std::pair<int, int>> edges;
  auto add_edge = [&](int a, int b) {
    if (a == b || !edges.insert(std::minmax(a, b)).second) return;
    const double d = uniform(0.001, 0.02);
    s.topology.links.push_back({r(a), r(b), opt.uniform_delay ? 0.005 : d, std::nullopt});
  };
  for (int i = 1; i < n; ++i) add_edge(i, pick(0, i - 1));
  const int extra = pick(0, n);
  for (int e = 0; e < extra; ++e) add_edge(pick(0, n - 1), pick(0, n - 1));

  const int core_links = static_cast<int>(s.topology.links.size());
  const int consumers = pick(0, 3);
  for (int c = 0; c < consumers; ++c) {
    const std::string name = "c" + std::to_string(c);
    s.topology.nodes.push_back({name, NodeKind::Consumer});
    s.topology.links.push_back({name, r(pick(0, n - 1)), std::nullopt, std::nullopt});
  }

  const auto kind = opt.plane == Plane::Adn ? Announcement::Kind::AdnAnchor
                                            : Announcement::Kind::NdnPrefix;
  const int prefixes = pick(1, 3);
  for (int p = 0; p < prefixes; ++p) {
    const auto prefix = NamePrefix::parse("/a" + std::to_string(p));
    s.announcements.push_back({kind, r(pick(0, n - 1)), {prefix}});
    if (gen() % 4 == 0) s.announcements.push_back({kind, r(pick(0, n - 1)), {prefix}});  // mirror
  }

  // Only router-router links fail; a consumer cut off from its router can never hear back.
  if (opt.stale_downs && core_links > 0) {
    const int downs = pick(0, 3);
    for (int d = 0; d < downs; ++d) {
      const auto& l = s.topology.links[static_cast<std::size_t>(pick(0, core_links - 1))];
      EventSpec e;
      e.time = uniform(0.1, 0.9);
      e.action = LinkEvent::Action::Down;
      e.a = l.a;
      e.b = l.b;
      s.events.push_back(e);
    }
  }

  std::vector<std::string> endpoints;
  for (int i = 0; i < n; ++i) endpoints.push_back(r(i));
  for (int c = 0; c < consumers; ++c) endpoints.push_back("c" + std::to_string(c));
  const int requests = pick(5, 30);
  for (int q = 0; q < requests; ++q) {
    const int object = opt.distinct_names ? q : pick(1, 4);
    const auto name = "/a" + std::to_string(pick(0, prefixes - 1)) + "/o" + std::to_string(object);
    s.workload.requests.push_back(
        {uniform(1.0, 3.0), endpoints[gen() % endpoints.size()], ContentName::parse(name)});
  }

  if (opt.multicast && gen() % 2 == 0) {
    GroupSpec g;
    g.group = NamePrefix::parse("/mcast/g");
    g.source = r(pick(0, n - 1));
    const int members = pick(2, std::min(5, n));
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < members) chosen.insert(pick(0, n - 1));
    for (int m : chosen) g.members.push_back(r(m));
    g.flow_length = static_cast<std::uint64_t>(pick(1, 3));
    g.start = uniform(1.0, 1.5);
    g.interval = uniform(0.3, 1.0);
    s.workload.groups.push_back(g);
  }
  return s;
}

}  // namespace cases

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icnsim/ndn_router.hpp"
#include "icnsim/routing.hpp"
#include "icnsim/topology.hpp"

namespace icnsim {

enum class Plane : std::uint8_t { Ndn, Adn };

std::string to_string(Plane p);

struct NodeSpec {
  std::string name;
  NodeKind kind = NodeKind::Router;
};

struct LinkSpec {
  std::string a;
  std::string b;
  std::optional<SimTime> delay;
  std::optional<double> rate_bps;
};

struct TopologySpec {
  bool generated = false;
  int n = 200;
  double side = 100;
  double radius = 12;
  std::uint64_t seed = 1;
  SimTime delay = 0.015;
  double rate_bps = 1e9;
  std::vector<NodeSpec> nodes;  // explicit mode
  std::vector<LinkSpec> links;
};

struct AnnouncementSpec {
  Announcement::Kind kind = Announcement::Kind::NdnPrefix;
  std::string node;
  std::vector<NamePrefix> prefixes;
};

struct EventSpec {
  SimTime time = 0;
  LinkEvent::Action action = LinkEvent::Action::Down;
  std::string a;  // Down/Up: link end; SetColor/SetDistance: router
  std::string b;  // Down/Up: link end; SetColor/SetDistance: neighbor
  NamePrefix prefix;
  Color color = Color::Yellow;
  std::string anchor;
  Distance distance = 0;
};

struct RequestSpec {
  SimTime time = 0;
  std::string node;  // consumer node, or router with a local consumer
  ContentName name = ContentName::parse("/unset");
};

struct GroupSpec {
  NamePrefix group;
  std::vector<std::string> members;
  std::string source;
  std::uint64_t flow_length = 1;
  SimTime start = 0;
  SimTime interval = 1.0;
};

struct WorkloadSpec {
  std::uint64_t catalog = 1'000'000;
  double zipf = 0.7;
  double rate = 0;
  std::optional<std::uint64_t> seed;  // defaults to the scenario seed
  std::vector<GroupSpec> groups;
  std::vector<RequestSpec> requests;
};

struct SweepSpec {
  std::vector<Plane> planes;
  std::vector<CachingMode> caching;
  std::vector<double> rates;
  bool empty() const { return planes.empty() && caching.empty() && rates.empty(); }
};

struct Scenario {
  std::string name = "unnamed";
  Plane plane = Plane::Ndn;
  CachingMode caching = CachingMode::Edge;
  std::uint64_t seed = 1;
  SimTime horizon = 60;
  SimTime warmup = 10;
  SimTime sample_interval = 0.1;
  SimTime pit_lifetime = 4.0;
  SimTime sat_timeout = 5.0;
  std::size_t cs_capacity = 1000;
  bool ndn_multipath = false;
  std::string multicast_marker = "mcast";
  /// Generated topologies: each router gets a local consumer and anchors /
  /// produces its own catalog prefix /p<i>.
  bool local_producers = true;
  double scale = 1.0;
  bool resource_heavy = false;

  TopologySpec topology;
  std::vector<AnnouncementSpec> announcements;
  std::vector<EventSpec> events;
  WorkloadSpec workload;
  SweepSpec sweep;

  std::optional<std::string> trace_path;
  std::optional<std::string> metrics_path;
};

struct ParseIssue {
  int line;  // 1-based; 0 when not tied to a line
  std::string message;
};

class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<ParseIssue> issues);
  const std::vector<ParseIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ParseIssue> issues_;
};

/// Parses and validates a scenario file. Throws ScenarioError listing every
/// problem found, each with its line.
Scenario parse_scenario(std::string_view text);
/// Canonical text form; parse_scenario(emit_scenario(s)) is equivalent to s.
std::string emit_scenario(const Scenario& s);

/// Shrinks node count, catalog and rates by `factor`; the area side shrinks
/// by sqrt(factor) so node density stays constant.
Scenario scaled(const Scenario& s, double factor);

/// One scenario per (plane, caching, rate) combination of the sweep section;
/// a scenario without a sweep expands to itself.
std::vector<Scenario> expand_sweep(const Scenario& s);

/// Builds the concrete topology; throws ConfigError for dangling references.
struct BuiltNetwork {
  Topology topology;
  std::vector<Announcement> announcements;
  std::uint64_t topology_seed = 0;
};
BuiltNetwork build_network(const Scenario& s);

struct BuiltinScenario {
  std::string name;
  std::string description;
  std::string text;
};
const std::vector<BuiltinScenario>& builtin_scenarios();
std::optional<BuiltinScenario> find_builtin(std::string_view name);

}  // namespace icnsim

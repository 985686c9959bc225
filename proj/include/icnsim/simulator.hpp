#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icnsim/adn_router.hpp"
#include "icnsim/ndn_router.hpp"
#include "icnsim/routing.hpp"
#include "icnsim/scenario.hpp"
#include "icnsim/topology.hpp"
#include "icnsim/trace.hpp"
#include "icnsim/workload.hpp"

namespace icnsim {

enum class Outcome : std::uint8_t { Pending, Data, Nack, Expired };

std::string to_string(Outcome o);

struct RequestRecord {
  TraceId id = 0;
  NodeId endpoint = -1;  // consumer node, or the router hosting the local consumer
  bool local_app = false;
  NodeId ingress = -1;
  ContentName name = ContentName::parse("/unset");
  SimTime issue = 0;
  Outcome outcome = Outcome::Pending;
  SimTime done = 0;
  std::optional<NackCode> nack_code;

  SimTime delay() const { return done - issue; }
};

struct TableSample {
  SimTime time = 0;
  std::vector<std::uint32_t> table;          // PIT (NDN) or SAT (ADN) entries per router
  std::vector<std::uint32_t> pending_local;  // local consumers' pending Interests per router
};

struct LinkChange {
  SimTime time;
  std::size_t link;
  bool up;
};

struct RunResult {
  Scenario scenario;
  Topology initial_topology;
  std::vector<Announcement> announcements;
  std::uint64_t topology_seed = 0;
  std::vector<NodeId> routers;  // column order of TableSample vectors
  std::vector<RequestRecord> requests;
  std::vector<TableSample> samples;
  std::vector<LinkChange> link_history;
  std::vector<TraceRecord> trace;  // empty unless tracing was requested
  std::map<std::string, std::uint64_t> counters;
  std::uint64_t events = 0;

  std::vector<std::string> node_names() const;
  std::string trace_text() const;
};

struct RunOptions {
  bool collect_trace = false;
  /// Safety valve for property tests; 0 disables.
  std::uint64_t max_events = 0;
};

/// Deterministic discrete-event engine. One forwarding plane per run.
class Simulator {
 public:
  explicit Simulator(const Scenario& scenario, RunOptions options = {});
  ~Simulator();

  RunResult run();

  NdnRouter* ndn_router(NodeId id);
  AdnRouter* adn_router(NodeId id);
  const Topology& topology() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

RunResult run(const Scenario& scenario, RunOptions options = {});

}  // namespace icnsim

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icnsim/packet.hpp"

namespace icnsim {

enum class TraceKind : std::uint8_t {
  Request,     // consumer issues a request; peer = ingress router
  Forward,     // Interest sent node -> peer; a = received distance, b = sent distance
  Aggregate,   // Interest from peer absorbed; a = received distance, b = best local distance
  Nack,        // NACK originated node -> peer
  Respond,     // Data originated node -> peer (cache or producer/anchor)
  DataFwd,     // Data relayed node -> peer
  NackFwd,     // NACK relayed node -> peer
  Deliver,     // response reached the consumer endpoint
  Expire,      // consumer gave up on the request
  PitExpire,   // PIT record timed out at a router; a = nonce
  SatExpire,   // SAT entry garbage collected
  Drop,        // packet discarded; detail says why
  Link,        // scripted control-plane event
  Sample,      // metrics sample tick
};

std::string to_string(TraceKind k);

struct TraceRecord {
  SimTime time = 0;
  TraceKind kind = TraceKind::Sample;
  NodeId node = -1;
  NodeId peer = -1;  // -1: none, -2: local application face
  std::string name;
  TraceId trace_id = 0;
  std::int64_t a = -1;
  std::int64_t b = -1;
  std::uint64_t flow = 0;
  std::string detail;
};

inline constexpr NodeId kLocalPeer = -2;

/// One line: "time kind node peer name trace a b flow detail", fixed field
/// order, nine decimals for time.
std::string format_trace_line(const TraceRecord& r, const std::vector<std::string>& node_names);

}  // namespace icnsim

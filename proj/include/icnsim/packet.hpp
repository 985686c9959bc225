#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "icnsim/address.hpp"
#include "icnsim/name.hpp"

namespace icnsim {

using NodeId = int;
using IfaceId = int;
using TraceId = std::uint64_t;
using SimTime = double;

/// Hop-count distance; kInfinity marks an unreachable neighbor.
using Distance = std::uint32_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// Interest as issued by a consumer: just the name.
struct ConsumerInterest {
  ContentName name;
  NodeId consumer = -1;
  SimTime issue_time = 0;
};

/// NDN Interest on the wire: name plus the origin's nonce.
struct NdnInterest {
  ContentName name;
  std::uint64_t nonce = 0;
  TraceId trace_id = 0;
};

/// ADN Interest sent by a router: I[o, s, a, h, f].
class RouterInterest {
 public:
  /// Throws std::invalid_argument when the flow state disagrees with the
  /// naming convention (0 iff unicast).
  RouterInterest(ContentName name, Address source, Address anchor, Distance distance,
                 std::uint64_t flow_state, TraceId trace_id,
                 const NamingConvention& conv = {});

  const ContentName& name() const noexcept { return name_; }
  const Address& source() const noexcept { return source_; }
  const Address& anchor() const noexcept { return anchor_; }
  Distance distance() const noexcept { return distance_; }
  std::uint64_t flow_state() const noexcept { return flow_state_; }
  TraceId trace_id() const noexcept { return trace_id_; }
  bool is_multicast() const noexcept { return flow_state_ > 0; }

  /// Nonce is carried for parity with NDN but never consulted by ADN.
  std::uint64_t nonce = 0;

  /// Copy with the distance rewritten for the next hop.
  RouterInterest with_distance(Distance d) const;

 private:
  ContentName name_;
  Address source_;
  Address anchor_;
  Distance distance_;
  std::uint64_t flow_state_;
  TraceId trace_id_;
};

enum class ResponseKind : std::uint8_t { Data, Nack };
enum class NackCode : std::uint8_t { NoRoute, DuplicateNonce, NoData, InvalidFlowState };

std::string to_string(NackCode c);

class ResponsePacket {
 public:
  static ResponsePacket data(ContentName name, Address source, std::uint64_t flow_state,
                             std::uint32_t payload_size, TraceId trace_id);
  static ResponsePacket nack(ContentName name, Address source, std::uint64_t flow_state,
                             NackCode code, TraceId trace_id);

  ResponseKind kind() const noexcept { return kind_; }
  bool is_data() const noexcept { return kind_ == ResponseKind::Data; }
  const ContentName& name() const noexcept { return name_; }
  const Address& source() const noexcept { return source_; }
  std::uint64_t flow_state() const noexcept { return flow_state_; }
  std::optional<NackCode> nack_code() const noexcept { return nack_code_; }
  std::uint32_t payload_size() const noexcept { return payload_size_; }
  TraceId trace_id() const noexcept { return trace_id_; }

  /// Distance the matching Interest carried on the hop this response is
  /// about to traverse (ADN only). Responses only move to origins with a
  /// strictly larger label, so they cannot cycle.
  Distance label = 0;

 private:
  ResponsePacket(ResponseKind kind, ContentName name, Address source, std::uint64_t flow,
                 std::optional<NackCode> code, std::uint32_t payload, TraceId trace)
      : kind_(kind), name_(std::move(name)), source_(source), flow_state_(flow),
        nack_code_(code), payload_size_(payload), trace_id_(trace) {}

  ResponseKind kind_;
  ContentName name_;
  Address source_;
  std::uint64_t flow_state_;
  std::optional<NackCode> nack_code_;
  std::uint32_t payload_size_;
  TraceId trace_id_;
};

using Packet = std::variant<NdnInterest, RouterInterest, ResponsePacket>;

/// Wire sizes used by the link serialization term.
struct PacketSizeModel {
  std::uint32_t interest_base = 64;
  std::uint32_t data_base = 1024;
  std::uint32_t nack_size = 64;

  std::uint32_t size_of(const Packet& p) const;
};

}  // namespace icnsim

#include "icnsim/packet.hpp"

#include <stdexcept>

namespace icnsim {

RouterInterest::RouterInterest(ContentName name, Address source, Address anchor,
                               Distance distance, std::uint64_t flow_state, TraceId trace_id,
                               const NamingConvention& conv)
    : name_(std::move(name)), source_(source), anchor_(anchor), distance_(distance),
      flow_state_(flow_state), trace_id_(trace_id) {
  const bool multicast = is_multicast_name(name_, conv);
  if (multicast != (flow_state_ > 0)) {
    throw std::invalid_argument("flow state " + std::to_string(flow_state_) +
                                " inconsistent with name " + name_.to_uri());
  }
}

RouterInterest RouterInterest::with_distance(Distance d) const {
  RouterInterest copy = *this;
  copy.distance_ = d;
  return copy;
}

std::string to_string(NackCode c) {
  switch (c) {
    case NackCode::NoRoute: return "NoRoute";
    case NackCode::DuplicateNonce: return "DuplicateNonce";
    case NackCode::NoData: return "NoData";
    case NackCode::InvalidFlowState: return "InvalidFlowState";
  }
  return "?";
}

ResponsePacket ResponsePacket::data(ContentName name, Address source, std::uint64_t flow_state,
                                    std::uint32_t payload_size, TraceId trace_id) {
  return ResponsePacket(ResponseKind::Data, std::move(name), source, flow_state, std::nullopt,
                        payload_size, trace_id);
}

ResponsePacket ResponsePacket::nack(ContentName name, Address source, std::uint64_t flow_state,
                                    NackCode code, TraceId trace_id) {
  return ResponsePacket(ResponseKind::Nack, std::move(name), source, flow_state, code, 0,
                        trace_id);
}

std::uint32_t PacketSizeModel::size_of(const Packet& p) const {
  struct Visitor {
    const PacketSizeModel& m;
    std::uint32_t operator()(const NdnInterest& i) const {
      return m.interest_base + static_cast<std::uint32_t>(i.name.key().size());
    }
    std::uint32_t operator()(const RouterInterest& i) const {
      return m.interest_base + static_cast<std::uint32_t>(i.name().key().size());
    }
    std::uint32_t operator()(const ResponsePacket& r) const {
      if (!r.is_data()) return m.nack_size;
      return m.data_base + static_cast<std::uint32_t>(r.name().key().size());
    }
  };
  return std::visit(Visitor{*this}, p);
}

}  // namespace icnsim

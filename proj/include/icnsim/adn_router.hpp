#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "icnsim/address.hpp"
#include "icnsim/content_store.hpp"
#include "icnsim/name.hpp"
#include "icnsim/ndn_router.hpp"
#include "icnsim/packet.hpp"

namespace icnsim {

/// Per-neighbor hop distances toward one anchor address prefix.
struct AdnFibEntry {
  AddressPrefix prefix;
  std::map<IfaceId, Distance> per_neighbor;
};

/// Source address table entry: reverse-path state per source, not per Interest.
///
/// Each origin interface keeps the largest distance an Interest from that
/// source carried when it arrived on it; responses use it as their label.
struct SatEntry {
  Address source;
  std::uint64_t flow_state = 0;
  std::map<IfaceId, Distance> origins{};
  SimTime last_refresh = 0;
  bool pending = false;  // multicast only: an Interest for f_i is outstanding
};

struct DibEntry {
  NamePrefix prefix;
  std::vector<Address> anchors;
};

/// Global name-prefix to anchor map, identical at every router.
class Dib {
 public:
  Dib() = default;
  explicit Dib(std::vector<DibEntry> entries);

  const DibEntry* longest_match(const NamePrefix& name) const;
  const std::vector<DibEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const Dib& a, const Dib& b);

 private:
  std::vector<DibEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class AdnActionKind : std::uint8_t { RespondData, Forward, Aggregate, Nack };

struct AdnAction {
  AdnActionKind kind;
  IfaceId iface = 0;                        // reply iface, or forward iface
  std::optional<RouterInterest> interest{}; // Forward: rewritten Interest
  NackCode nack_code = NackCode::NoRoute;
  bool produced_locally = false;            // RespondData because this router is the anchor
};

struct AdnConfig {
  SimTime sat_timeout = 5.0;
  SimTime consumer_timeout = 4.0;  // lifetime of a local consumer's pending Interest
  CachingMode caching = CachingMode::Edge;
  std::size_t cs_capacity = 1000;
  NamingConvention naming;
};

struct AdnResponseResult {
  std::vector<std::pair<IfaceId, Distance>> forward;  // router ifaces with outgoing label
  std::vector<IfaceId> consumers;                     // consumer-facing deliveries
  bool cached = false;
  bool dropped = false;
};

struct LocalPending {
  IfaceId iface;
  SimTime expiry;
  TraceId trace_id;
};

/// ADN forwarding pipeline: DIB binding at ingress, anchor-distance FIB,
/// SAT, and the forwarding/aggregation/negation rules.
class AdnRouter {
 public:
  AdnRouter(NodeId id, AdnConfig config, std::vector<bool> consumer_facing);

  NodeId id() const noexcept { return id_; }
  Address address() const noexcept { return router_address(id_); }
  Address local_source() const noexcept { return consumer_scope_address(id_); }
  const AdnConfig& config() const noexcept { return config_; }

  void set_fib(std::vector<AdnFibEntry> entries);
  const std::vector<AdnFibEntry>& fib() const noexcept { return fib_; }
  const AdnFibEntry* fib_match(std::uint64_t address) const;
  /// Scripted override of one per-neighbor distance; creates the entry if needed.
  void set_distance(AddressPrefix prefix, IfaceId iface, Distance d);
  void set_dib(std::shared_ptr<const Dib> dib) { dib_ = std::move(dib); }
  const Dib* dib() const noexcept { return dib_.get(); }

  void set_iface_up(IfaceId iface, bool up);
  bool iface_up(IfaceId iface) const;
  bool is_consumer_facing(IfaceId iface) const;

  /// h_i(a, v) for an up neighbor v, kInfinity otherwise.
  Distance distance_via(std::uint64_t anchor, IfaceId iface) const;
  /// Minimum over up neighbors and the iface achieving it (ties by iface id).
  std::pair<Distance, IfaceId> best_next_hop(std::uint64_t anchor,
                                             std::optional<IfaceId> exclude = {}) const;

  /// DIB best match, then the anchor with minimum FIB distance (ties by address).
  std::optional<Address> bind_name_to_anchor(const ContentName& name) const;
  /// Router-form Interest for a local request, before any forwarding decision.
  RouterInterest ingress_make_interest(const ContentName& name, Address anchor, TraceId trace,
                                       SimTime now) const;

  /// Full ingress handling of a request from a local consumer on `consumer_iface`.
  AdnAction ingress(const ContentName& name, IfaceId consumer_iface, TraceId trace, SimTime now);
  /// Interest received from another router.
  AdnAction process_interest(const RouterInterest& interest, IfaceId in_iface, SimTime now);
  AdnResponseResult process_response(const ResponsePacket& response, IfaceId in_iface,
                                     SimTime now);

  std::vector<SatEntry> sat_gc(SimTime now);
  std::vector<LocalPending> expire_local(SimTime now);

  const SatEntry* sat_find(const Address& source) const;
  std::size_t sat_size() const noexcept { return sat_.size(); }
  std::size_t pending_local() const;
  ContentStore& cs() noexcept { return cs_; }

 private:
  SatEntry* sat_live(const Address& source, SimTime now);
  void add_pending(const ContentName& name, IfaceId iface, TraceId trace, SimTime now);
  bool is_anchor_for(const ContentName& name) const;

  NodeId id_;
  AdnConfig config_;
  std::vector<bool> consumer_facing_;
  std::vector<bool> iface_up_;
  std::vector<AdnFibEntry> fib_;
  std::vector<unsigned> fib_lengths_;  // distinct prefix lengths, longest first
  std::map<std::pair<unsigned, std::uint64_t>, std::size_t> fib_index_;
  std::shared_ptr<const Dib> dib_;
  std::unordered_map<Address, SatEntry> sat_;
  std::unordered_map<ContentName, std::vector<LocalPending>> local_;
  ContentStore cs_;
};

}  // namespace icnsim

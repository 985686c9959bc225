#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "icnsim/content_store.hpp"
#include "icnsim/name.hpp"
#include "icnsim/packet.hpp"

namespace icnsim {

/// Interface id of the router's built-in local application face.
inline constexpr IfaceId kLocalFace = -1;

/// None disables every content store insertion (delay comparisons).
enum class CachingMode : std::uint8_t { Edge, OnPath, None };
enum class Color : std::uint8_t { Green, Yellow, Red };

std::string to_string(CachingMode m);
std::optional<CachingMode> parse_caching(std::string_view s);
std::string to_string(Color c);
std::optional<Color> parse_color(std::string_view s);

struct IfaceRank {
  IfaceId iface = 0;
  Color color = Color::Yellow;
  int routing_preference = 0;
};

struct NdnFibEntry {
  NamePrefix prefix;
  std::vector<IfaceRank> interfaces;
  SimTime stale_time = 0;

  /// Green < Yellow < Red, then preference, then iface id.
  void sort();
  IfaceRank* find(IfaceId iface);
};

struct PitInRecord {
  std::uint64_t nonce = 0;
  IfaceId in_iface = 0;
  SimTime lifetime_expiry = 0;
  TraceId trace_id = 0;
};

struct PitOutRecord {
  IfaceId iface = 0;
  SimTime send_time = 0;
};

struct PitEntry {
  ContentName name;
  std::vector<PitInRecord> records;
  std::vector<PitOutRecord> out_ifaces;
};

enum class NdnActionKind : std::uint8_t {
  RespondData,
  Aggregate,
  Forward,
  NackDuplicate,
  NackNoRoute,
};

struct NdnAction {
  NdnActionKind kind;
  std::vector<IfaceId> ifaces;  // reply iface, or the forward set
  bool produced_locally = false;  // RespondData from a local producer rather than the CS
};

enum class RankEvent : std::uint8_t {
  InterestTimeout,
  NackNoData,
  NackDuplicate,
  DataReceived,
  LinkDown,
  LinkUp,
};

struct NdnConfig {
  SimTime pit_lifetime = 4.0;
  CachingMode caching = CachingMode::Edge;
  bool multipath = false;
  std::size_t cs_capacity = 1000;
};

struct NdnResponseResult {
  bool matched = false;          // a PIT entry existed
  bool cached = false;
  std::vector<PitInRecord> downstream;  // one per aggregated Interest
};

struct PitExpiry {
  ContentName name;
  std::uint64_t nonce;
  IfaceId in_iface;
  TraceId trace_id;
};

/// NDN forwarding pipeline: CS, PIT and a name-prefix FIB with colored
/// interface ranking.
class NdnRouter {
 public:
  NdnRouter(NodeId id, NdnConfig config, std::vector<bool> consumer_facing);

  NodeId id() const noexcept { return id_; }
  const NdnConfig& config() const noexcept { return config_; }

  void set_fib(std::vector<NdnFibEntry> entries);
  NdnFibEntry* fib_match(const NamePrefix& name);
  const std::vector<NdnFibEntry>& fib() const noexcept { return fib_; }

  /// Prefixes served by a producer attached through the local face.
  void add_local_prefix(NamePrefix prefix) { local_prefixes_.push_back(std::move(prefix)); }
  bool produces(const ContentName& name) const;

  NdnAction process_interest(const NdnInterest& interest, IfaceId in_iface, SimTime now);
  NdnResponseResult process_response(const ResponsePacket& response, IfaceId in_iface,
                                     SimTime now);
  std::vector<PitExpiry> pit_expire(SimTime now);

  /// Applies a ranking event to `iface` in the entry for `prefix`.
  /// Returns the new color, or nothing when the iface is unknown.
  std::optional<Color> rank_update(const NamePrefix& prefix, IfaceId iface, RankEvent event);
  /// Applies LinkDown/LinkUp to every FIB entry listing the iface.
  void link_state_changed(IfaceId iface, bool up);
  /// Scripted override of one interface color.
  bool set_color(const NamePrefix& prefix, IfaceId iface, Color color);

  bool is_consumer_facing(IfaceId iface) const;
  const PitEntry* pit_find(const ContentName& name) const;
  std::size_t pit_size() const noexcept { return pit_.size(); }
  std::size_t pending_local() const;
  ContentStore& cs() noexcept { return cs_; }

 private:
  NodeId id_;
  NdnConfig config_;
  std::vector<bool> consumer_facing_;
  std::vector<NdnFibEntry> fib_;
  std::unordered_map<std::string, std::size_t> fib_index_;
  std::vector<NamePrefix> local_prefixes_;
  std::unordered_map<ContentName, PitEntry> pit_;
  ContentStore cs_;
};

}  // namespace icnsim

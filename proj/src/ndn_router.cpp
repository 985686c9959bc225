#include "icnsim/ndn_router.hpp"

#include <algorithm>

namespace icnsim {

std::string to_string(CachingMode m) {
  switch (m) {
    case CachingMode::Edge: return "edge";
    case CachingMode::OnPath: return "on_path";
    case CachingMode::None: return "none";
  }
  return "?";
}

std::optional<CachingMode> parse_caching(std::string_view s) {
  if (s == "edge") return CachingMode::Edge;
  if (s == "on_path") return CachingMode::OnPath;
  if (s == "none") return CachingMode::None;
  return std::nullopt;
}

std::string to_string(Color c) {
  switch (c) {
    case Color::Green: return "green";
    case Color::Yellow: return "yellow";
    case Color::Red: return "red";
  }
  return "?";
}

std::optional<Color> parse_color(std::string_view s) {
  if (s == "green") return Color::Green;
  if (s == "yellow") return Color::Yellow;
  if (s == "red") return Color::Red;
  return std::nullopt;
}

void NdnFibEntry::sort() {
  std::stable_sort(interfaces.begin(), interfaces.end(), [](const IfaceRank& a, const IfaceRank& b) {
    if (a.color != b.color) return a.color < b.color;
    if (a.routing_preference != b.routing_preference) {
      return a.routing_preference < b.routing_preference;
    }
    return a.iface < b.iface;
  });
}

IfaceRank* NdnFibEntry::find(IfaceId iface) {
  for (auto& r : interfaces) {
    if (r.iface == iface) return &r;
  }
  return nullptr;
}

NdnRouter::NdnRouter(NodeId id, NdnConfig config, std::vector<bool> consumer_facing)
    : id_(id), config_(config), consumer_facing_(std::move(consumer_facing)),
      cs_(config.cs_capacity) {}

void NdnRouter::set_fib(std::vector<NdnFibEntry> entries) {
  fib_ = std::move(entries);
  fib_index_.clear();
  for (std::size_t i = 0; i < fib_.size(); ++i) {
    fib_[i].sort();
    fib_index_[fib_[i].prefix.key()] = i;
  }
}

NdnFibEntry* NdnRouter::fib_match(const NamePrefix& name) {
  // Walk from the full name down to the root; the first hit is the longest.
  for (std::size_t len = name.size() + 1; len-- > 0;) {
    auto it = fib_index_.find(name.prefix(len).key());
    if (it != fib_index_.end()) return &fib_[it->second];
  }
  return nullptr;
}

bool NdnRouter::produces(const ContentName& name) const {
  return std::any_of(local_prefixes_.begin(), local_prefixes_.end(),
                     [&](const NamePrefix& p) { return name_matches_prefix(name, p); });
}

bool NdnRouter::is_consumer_facing(IfaceId iface) const {
  if (iface == kLocalFace) return true;
  return iface >= 0 && static_cast<std::size_t>(iface) < consumer_facing_.size() &&
         consumer_facing_[static_cast<std::size_t>(iface)];
}

NdnAction NdnRouter::process_interest(const NdnInterest& interest, IfaceId in_iface,
                                      SimTime now) {
  if (cs_.lookup(interest.name)) return {NdnActionKind::RespondData, {in_iface}, false};
  if (produces(interest.name)) return {NdnActionKind::RespondData, {in_iface}, true};

  if (auto it = pit_.find(interest.name); it != pit_.end()) {
    auto& records = it->second.records;
    const bool duplicate = std::any_of(records.begin(), records.end(), [&](const PitInRecord& r) {
      return r.nonce == interest.nonce;
    });
    if (duplicate) return {NdnActionKind::NackDuplicate, {in_iface}};
    records.push_back({interest.nonce, in_iface, now + config_.pit_lifetime, interest.trace_id});
    return {NdnActionKind::Aggregate, {}};
  }

  NdnFibEntry* entry = fib_match(interest.name);
  if (entry == nullptr) return {NdnActionKind::NackNoRoute, {in_iface}};

  std::vector<IfaceId> out;
  std::optional<Color> best_class;
  for (const auto& rank : entry->interfaces) {  // already in rank order
    if (rank.color == Color::Red || rank.iface == in_iface) continue;
    if (!best_class) best_class = rank.color;
    if (rank.color != *best_class) break;
    out.push_back(rank.iface);
    if (!config_.multipath) break;
  }
  if (out.empty()) return {NdnActionKind::NackNoRoute, {in_iface}};

  PitEntry pe{interest.name, {}, {}};
  pe.records.push_back({interest.nonce, in_iface, now + config_.pit_lifetime, interest.trace_id});
  for (IfaceId f : out) pe.out_ifaces.push_back({f, now});
  pit_.emplace(interest.name, std::move(pe));
  return {NdnActionKind::Forward, std::move(out)};
}

NdnResponseResult NdnRouter::process_response(const ResponsePacket& response, IfaceId in_iface,
                                              SimTime) {
  NdnResponseResult result;
  if (NdnFibEntry* entry = fib_match(response.name())) {
    if (response.is_data()) {
      rank_update(entry->prefix, in_iface, RankEvent::DataReceived);
    } else if (response.nack_code() == NackCode::NoData) {
      rank_update(entry->prefix, in_iface, RankEvent::NackNoData);
    } else if (response.nack_code() == NackCode::DuplicateNonce) {
      rank_update(entry->prefix, in_iface, RankEvent::NackDuplicate);
    }
  }

  auto it = pit_.find(response.name());
  if (it == pit_.end()) return result;
  result.matched = true;
  result.downstream = std::move(it->second.records);
  pit_.erase(it);

  if (response.is_data()) {
    bool insert = config_.caching == CachingMode::OnPath;
    if (!insert && config_.caching == CachingMode::Edge) {
      insert = std::any_of(result.downstream.begin(), result.downstream.end(),
                           [&](const PitInRecord& r) { return is_consumer_facing(r.in_iface); });
    }
    if (insert) {
      cs_.insert(response.name(), response.payload_size());
      result.cached = true;
    }
  }
  return result;
}

std::vector<PitExpiry> NdnRouter::pit_expire(SimTime now) {
  std::vector<PitExpiry> expired;
  std::vector<std::pair<NamePrefix, IfaceId>> timeouts;
  for (auto it = pit_.begin(); it != pit_.end();) {
    auto& records = it->second.records;
    for (auto r = records.begin(); r != records.end();) {
      if (r->lifetime_expiry <= now) {
        expired.push_back({it->first, r->nonce, r->in_iface, r->trace_id});
        r = records.erase(r);
      } else {
        ++r;
      }
    }
    if (records.empty()) {
      for (const auto& o : it->second.out_ifaces) timeouts.emplace_back(it->first, o.iface);
      it = pit_.erase(it);
    } else {
      ++it;
    }
  }
  for (const auto& [name, iface] : timeouts) {
    if (NdnFibEntry* entry = fib_match(name)) {
      rank_update(entry->prefix, iface, RankEvent::InterestTimeout);
    }
  }
  // unordered_map iteration order is not stable across library versions.
  std::sort(expired.begin(), expired.end(), [](const PitExpiry& a, const PitExpiry& b) {
    if (a.name.key() != b.name.key()) return a.name.key() < b.name.key();
    return a.nonce < b.nonce;
  });
  return expired;
}

std::optional<Color> NdnRouter::rank_update(const NamePrefix& prefix, IfaceId iface,
                                            RankEvent event) {
  auto idx = fib_index_.find(prefix.key());
  if (idx == fib_index_.end()) return std::nullopt;
  NdnFibEntry& entry = fib_[idx->second];
  IfaceRank* rank = entry.find(iface);
  if (rank == nullptr) return std::nullopt;
  switch (event) {
    case RankEvent::InterestTimeout:
    case RankEvent::NackNoData:
    case RankEvent::NackDuplicate:
      if (rank->color == Color::Green) rank->color = Color::Yellow;
      break;
    case RankEvent::DataReceived:
      if (rank->color == Color::Yellow) rank->color = Color::Green;
      break;
    case RankEvent::LinkDown:
      rank->color = Color::Red;
      break;
    case RankEvent::LinkUp:
      if (rank->color == Color::Red) rank->color = Color::Yellow;
      break;
  }
  const Color result = rank->color;
  entry.sort();
  return result;
}

void NdnRouter::link_state_changed(IfaceId iface, bool up) {
  for (auto& entry : fib_) {
    rank_update(entry.prefix, iface, up ? RankEvent::LinkUp : RankEvent::LinkDown);
  }
}

bool NdnRouter::set_color(const NamePrefix& prefix, IfaceId iface, Color color) {
  auto idx = fib_index_.find(prefix.key());
  if (idx == fib_index_.end()) return false;
  NdnFibEntry& entry = fib_[idx->second];
  IfaceRank* rank = entry.find(iface);
  if (rank == nullptr) return false;
  rank->color = color;
  entry.sort();
  return true;
}

const PitEntry* NdnRouter::pit_find(const ContentName& name) const {
  auto it = pit_.find(name);
  return it == pit_.end() ? nullptr : &it->second;
}

std::size_t NdnRouter::pending_local() const {
  std::size_t n = 0;
  for (const auto& [name, entry] : pit_) {
    for (const auto& r : entry.records) {
      if (is_consumer_facing(r.in_iface)) ++n;
    }
  }
  return n;
}

}  // namespace icnsim

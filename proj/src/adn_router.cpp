#include "icnsim/adn_router.hpp"

#include <algorithm>

namespace icnsim {

namespace {
std::uint64_t mask_to(std::uint64_t v, unsigned bits) {
  if (bits == 0) return 0;
  if (bits >= 64) return v;
  return v & (~0ULL << (64 - bits));
}
}  // namespace

Dib::Dib(std::vector<DibEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) index_[entries_[i].prefix.key()] = i;
}

const DibEntry* Dib::longest_match(const NamePrefix& name) const {
  for (std::size_t len = name.size() + 1; len-- > 0;) {
    auto it = index_.find(name.prefix(len).key());
    if (it != index_.end()) return &entries_[it->second];
  }
  return nullptr;
}

bool operator==(const Dib& a, const Dib& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i].prefix == b.entries_[i].prefix) ||
        a.entries_[i].anchors != b.entries_[i].anchors) {
      return false;
    }
  }
  return true;
}

AdnRouter::AdnRouter(NodeId id, AdnConfig config, std::vector<bool> consumer_facing)
    : id_(id), config_(std::move(config)), consumer_facing_(std::move(consumer_facing)),
      iface_up_(consumer_facing_.size(), true), cs_(config_.cs_capacity) {}

void AdnRouter::set_fib(std::vector<AdnFibEntry> entries) {
  fib_ = std::move(entries);
  fib_index_.clear();
  fib_lengths_.clear();
  for (std::size_t i = 0; i < fib_.size(); ++i) {
    const auto& p = fib_[i].prefix;
    fib_index_[{p.bits, mask_to(p.value, p.bits)}] = i;
    if (std::find(fib_lengths_.begin(), fib_lengths_.end(), p.bits) == fib_lengths_.end()) {
      fib_lengths_.push_back(p.bits);
    }
  }
  std::sort(fib_lengths_.rbegin(), fib_lengths_.rend());
}

const AdnFibEntry* AdnRouter::fib_match(std::uint64_t address) const {
  for (unsigned bits : fib_lengths_) {
    auto it = fib_index_.find({bits, mask_to(address, bits)});
    if (it != fib_index_.end()) return &fib_[it->second];
  }
  return nullptr;
}

void AdnRouter::set_distance(AddressPrefix prefix, IfaceId iface, Distance d) {
  for (auto& e : fib_) {
    if (e.prefix == prefix) {
      e.per_neighbor[iface] = d;
      return;
    }
  }
  auto entries = fib_;
  entries.push_back(AdnFibEntry{prefix, {{iface, d}}});
  set_fib(std::move(entries));
}

void AdnRouter::set_iface_up(IfaceId iface, bool up) {
  if (iface < 0) return;
  if (static_cast<std::size_t>(iface) >= iface_up_.size()) iface_up_.resize(iface + 1, true);
  iface_up_[static_cast<std::size_t>(iface)] = up;
}

bool AdnRouter::iface_up(IfaceId iface) const {
  if (iface < 0) return true;
  return static_cast<std::size_t>(iface) >= iface_up_.size() ||
         iface_up_[static_cast<std::size_t>(iface)];
}

bool AdnRouter::is_consumer_facing(IfaceId iface) const {
  if (iface == kLocalFace) return true;
  return iface >= 0 && static_cast<std::size_t>(iface) < consumer_facing_.size() &&
         consumer_facing_[static_cast<std::size_t>(iface)];
}

Distance AdnRouter::distance_via(std::uint64_t anchor, IfaceId iface) const {
  const AdnFibEntry* e = fib_match(anchor);
  if (e == nullptr || !iface_up(iface)) return kInfinity;
  auto it = e->per_neighbor.find(iface);
  return it == e->per_neighbor.end() ? kInfinity : it->second;
}

std::pair<Distance, IfaceId> AdnRouter::best_next_hop(std::uint64_t anchor,
                                                      std::optional<IfaceId> exclude) const {
  std::pair<Distance, IfaceId> best{kInfinity, -1};
  const AdnFibEntry* e = fib_match(anchor);
  if (e == nullptr) return best;
  for (const auto& [iface, d] : e->per_neighbor) {  // ascending iface id
    if (d == kInfinity || !iface_up(iface) || iface == exclude) continue;
    if (d < best.first) best = {d, iface};
  }
  return best;
}

bool AdnRouter::is_anchor_for(const ContentName& name) const {
  if (!dib_) return false;
  const DibEntry* e = dib_->longest_match(name);
  if (e == nullptr) return false;
  return std::any_of(e->anchors.begin(), e->anchors.end(),
                     [&](const Address& a) { return a.value == address().value; });
}

std::optional<Address> AdnRouter::bind_name_to_anchor(const ContentName& name) const {
  if (!dib_) return std::nullopt;
  const DibEntry* e = dib_->longest_match(name);
  if (e == nullptr || e->anchors.empty()) return std::nullopt;
  std::optional<Address> best;
  Distance best_d = kInfinity;
  for (const Address& a : e->anchors) {
    const Distance d = a.value == address().value ? 0 : best_next_hop(a.value).first;
    if (!best || d < best_d || (d == best_d && a.value < best->value)) {
      best = a;
      best_d = d;
    }
  }
  return best;
}

const SatEntry* AdnRouter::sat_find(const Address& source) const {
  auto it = sat_.find(source);
  return it == sat_.end() ? nullptr : &it->second;
}

SatEntry* AdnRouter::sat_live(const Address& source, SimTime now) {
  auto it = sat_.find(source);
  if (it == sat_.end()) return nullptr;
  if (now - it->second.last_refresh >= config_.sat_timeout) {
    sat_.erase(it);
    return nullptr;
  }
  return &it->second;
}

RouterInterest AdnRouter::ingress_make_interest(const ContentName& name, Address anchor,
                                                TraceId trace, SimTime now) const {
  const bool multicast = is_multicast_name(name, config_.naming);
  Address source = local_source();
  std::uint64_t flow = 0;
  if (multicast) {
    source = multicast_address_of(*multicast_group_of(name, config_.naming), config_.naming);
    flow = 1;
    if (const SatEntry* s = sat_find(source);
        s != nullptr && now - s->last_refresh < config_.sat_timeout) {
      flow = s->flow_state + 1;
    }
  }
  return RouterInterest(name, source, anchor, best_next_hop(anchor.value).first, flow, trace,
                        config_.naming);
}

void AdnRouter::add_pending(const ContentName& name, IfaceId iface, TraceId trace, SimTime now) {
  local_[name].push_back({iface, now + config_.consumer_timeout, trace});
}

AdnAction AdnRouter::ingress(const ContentName& name, IfaceId consumer_iface, TraceId trace,
                             SimTime now) {
  if (cs_.lookup(name)) return {AdnActionKind::RespondData, consumer_iface};
  if (is_anchor_for(name)) {
    AdnAction a{AdnActionKind::RespondData, consumer_iface};
    a.produced_locally = true;
    return a;
  }
  const auto anchor = bind_name_to_anchor(name);
  if (!anchor) return {AdnActionKind::Nack, consumer_iface, std::nullopt, NackCode::NoRoute};

  RouterInterest interest = ingress_make_interest(name, *anchor, trace, now);
  const auto [dist, next] = best_next_hop(anchor->value);
  if (dist == kInfinity) {
    return {AdnActionKind::Nack, consumer_iface, std::nullopt, NackCode::NoRoute};
  }

  SatEntry* sat = sat_live(interest.source(), now);
  if (interest.is_multicast() && sat != nullptr && sat->pending && local_.contains(name)) {
    // This very object is already requested upstream for another local consumer.
    sat->origins[consumer_iface] = kInfinity;
    sat->last_refresh = now;
    add_pending(name, consumer_iface, trace, now);
    return {AdnActionKind::Aggregate, consumer_iface};
  }
  if (sat == nullptr) {
    sat = &sat_.emplace(interest.source(), SatEntry{interest.source()}).first->second;
  }
  sat->origins[consumer_iface] = kInfinity;
  sat->flow_state = interest.flow_state();
  sat->pending = interest.is_multicast();
  sat->last_refresh = now;
  add_pending(name, consumer_iface, trace, now);
  return {AdnActionKind::Forward, next, std::move(interest)};
}

AdnAction AdnRouter::process_interest(const RouterInterest& interest, IfaceId in_iface,
                                      SimTime now) {
  if (interest.anchor().value == address().value) {
    if (!is_anchor_for(interest.name())) {
      return {AdnActionKind::Nack, in_iface, std::nullopt, NackCode::NoData};
    }
    AdnAction a{AdnActionKind::RespondData, in_iface};
    a.produced_locally = true;
    return a;
  }
  if (config_.caching == CachingMode::OnPath && cs_.lookup(interest.name())) {
    return {AdnActionKind::RespondData, in_iface};
  }

  // The Interest carries the sender's current distance, which supersedes whatever
  // our FIB last heard from it; never hand the Interest straight back.
  const auto [best, next] = best_next_hop(interest.anchor().value, in_iface);
  if (best == kInfinity || !(interest.distance() > best)) {
    return {AdnActionKind::Nack, in_iface, std::nullopt, NackCode::NoRoute};
  }

  SatEntry* sat = sat_live(interest.source(), now);
  const std::uint64_t f = interest.flow_state();
  bool forward = false;
  if (f == 0) {
    forward = true;
  } else if (sat == nullptr) {
    forward = true;  // f == 1 starts a flow; a larger f re-establishes aged-out state
  } else if (f == sat->flow_state + 1) {
    forward = true;
  } else if (f == sat->flow_state && sat->pending) {
    auto& label = sat->origins[in_iface];
    label = std::max(label, interest.distance());
    sat->last_refresh = now;
    return {AdnActionKind::Aggregate, in_iface};
  } else {
    return {AdnActionKind::Nack, in_iface, std::nullopt, NackCode::InvalidFlowState};
  }

  if (!forward) return {AdnActionKind::Nack, in_iface, std::nullopt, NackCode::NoRoute};
  if (sat == nullptr) {
    sat = &sat_.emplace(interest.source(), SatEntry{interest.source()}).first->second;
  }
  auto& label = sat->origins[in_iface];
  label = std::max(label, interest.distance());
  sat->flow_state = f;
  sat->pending = f > 0;
  sat->last_refresh = now;
  return {AdnActionKind::Forward, next, interest.with_distance(best)};
}

AdnResponseResult AdnRouter::process_response(const ResponsePacket& response, IfaceId /*in_iface*/,
                                              SimTime now) {
  AdnResponseResult result;
  if (response.source() == local_source()) {
    if (SatEntry* own = sat_live(local_source(), now)) own->last_refresh = now;
    auto it = local_.find(response.name());
    if (it == local_.end()) {
      result.dropped = true;
      return result;
    }
    for (const auto& p : it->second) result.consumers.push_back(p.iface);
    local_.erase(it);
  } else {
    SatEntry* sat = sat_live(response.source(), now);
    if (sat == nullptr) {
      result.dropped = true;
      return result;
    }
    for (const auto& [iface, label] : sat->origins) {
      if (label <= response.label) continue;
      if (is_consumer_facing(iface)) {
        result.consumers.push_back(iface);
      } else if (iface_up(iface)) {
        result.forward.emplace_back(iface, label);
      }
    }
    if (sat->flow_state > 0) sat->pending = false;
    sat->last_refresh = now;
    if (!result.consumers.empty()) {
      if (auto it = local_.find(response.name()); it != local_.end()) {
        auto& v = it->second;
        v.erase(std::remove_if(v.begin(), v.end(),
                               [&](const LocalPending& p) {
                                 return std::find(result.consumers.begin(),
                                                  result.consumers.end(),
                                                  p.iface) != result.consumers.end();
                               }),
                v.end());
        if (v.empty()) local_.erase(it);
      }
    }
    if (result.consumers.empty() && result.forward.empty()) result.dropped = true;
  }

  if (response.is_data() &&
      (config_.caching == CachingMode::OnPath ||
       (config_.caching == CachingMode::Edge && !result.consumers.empty()))) {
    cs_.insert(response.name(), response.payload_size());
    result.cached = true;
  }
  return result;
}

std::vector<SatEntry> AdnRouter::sat_gc(SimTime now) {
  std::vector<SatEntry> removed;
  for (auto it = sat_.begin(); it != sat_.end();) {
    if (now - it->second.last_refresh >= config_.sat_timeout) {
      removed.push_back(std::move(it->second));
      it = sat_.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(removed.begin(), removed.end(),
            [](const SatEntry& a, const SatEntry& b) { return a.source < b.source; });
  return removed;
}

std::vector<LocalPending> AdnRouter::expire_local(SimTime now) {
  std::vector<LocalPending> expired;
  for (auto it = local_.begin(); it != local_.end();) {
    auto& v = it->second;
    for (auto p = v.begin(); p != v.end();) {
      if (p->expiry <= now) {
        expired.push_back(*p);
        p = v.erase(p);
      } else {
        ++p;
      }
    }
    it = v.empty() ? local_.erase(it) : std::next(it);
  }
  std::sort(expired.begin(), expired.end(),
            [](const LocalPending& a, const LocalPending& b) { return a.trace_id < b.trace_id; });
  return expired;
}

std::size_t AdnRouter::pending_local() const {
  std::size_t n = 0;
  for (const auto& [name, v] : local_) n += v.size();
  return n;
}

}  // namespace icnsim

#include "icnsim/routing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace icnsim {

Announcement Announcement::ndn(NodeId at, NamePrefix prefix) {
  Announcement a;
  a.kind = Kind::NdnPrefix;
  a.at = at;
  a.prefixes.push_back(std::move(prefix));
  return a;
}

Announcement Announcement::anchor(NodeId at, std::vector<NamePrefix> served) {
  Announcement a;
  a.kind = Kind::AdnAnchor;
  a.at = at;
  a.prefixes = std::move(served);
  a.address_prefix = AddressPrefix{anchor_address(at).value, 64};
  return a;
}

std::string to_string(LinkEvent::Action a) {
  switch (a) {
    case LinkEvent::Action::Down: return "down";
    case LinkEvent::Action::Up: return "up";
    case LinkEvent::Action::SetColor: return "color";
    case LinkEvent::Action::SetDistance: return "distance";
    case LinkEvent::Action::RecomputeRoutes: return "recompute";
  }
  return "?";
}

std::vector<Distance> hop_distances(const Topology& topo, std::span<const NodeId> sources) {
  std::vector<Distance> dist(topo.node_count(), kInfinity);
  std::deque<NodeId> queue;
  for (NodeId s : sources) {
    if (dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const Distance du = dist[static_cast<std::size_t>(u)];
    if (du != 0 && !topo.is_router(u)) continue;  // leaves never relay
    for (const auto& f : topo.node(u).ifaces) {
      if (!topo.link(f.link).up) continue;
      auto& dv = dist[static_cast<std::size_t>(f.neighbor)];
      if (dv != kInfinity) continue;
      dv = du + 1;
      queue.push_back(f.neighbor);
    }
  }
  return dist;
}

std::vector<std::vector<AdnFibEntry>> compute_adn_fibs(const Topology& topo,
                                                       std::span<const Announcement> anns) {
  std::vector<std::vector<AdnFibEntry>> fibs(topo.node_count());
  // One entry per distinct address prefix, in first-announcement order.
  std::vector<AddressPrefix> seen;
  for (const auto& ann : anns) {
    if (ann.kind != Announcement::Kind::AdnAnchor) continue;
    if (std::find(seen.begin(), seen.end(), ann.address_prefix) != seen.end()) continue;
    seen.push_back(ann.address_prefix);

    std::vector<NodeId> sources;
    for (const auto& other : anns) {
      if (other.kind == Announcement::Kind::AdnAnchor &&
          other.address_prefix == ann.address_prefix) {
        sources.push_back(other.at);
      }
    }
    const auto dist = hop_distances(topo, sources);
    for (NodeId r : topo.routers()) {
      AdnFibEntry entry{ann.address_prefix, {}};
      const auto& ifaces = topo.node(r).ifaces;
      for (std::size_t i = 0; i < ifaces.size(); ++i) {
        const NodeId k = ifaces[i].neighbor;
        if (!topo.link(ifaces[i].link).up || !topo.is_router(k)) continue;
        const Distance dk = dist[static_cast<std::size_t>(k)];
        if (dk == kInfinity) continue;
        entry.per_neighbor[static_cast<IfaceId>(i)] = dk + 1;
      }
      if (!entry.per_neighbor.empty()) fibs[static_cast<std::size_t>(r)].push_back(std::move(entry));
    }
  }
  return fibs;
}

std::vector<std::vector<NdnFibEntry>> compute_ndn_fibs(const Topology& topo,
                                                       std::span<const Announcement> anns) {
  std::vector<std::vector<NdnFibEntry>> fibs(topo.node_count());
  std::map<NamePrefix, std::vector<NodeId>> producers;
  std::vector<NamePrefix> order;
  for (const auto& ann : anns) {
    if (ann.kind != Announcement::Kind::NdnPrefix) continue;
    for (const auto& p : ann.prefixes) {
      auto [it, fresh] = producers.try_emplace(p);
      if (fresh) order.push_back(p);
      it->second.push_back(ann.at);
    }
  }
  constexpr int kUnreachablePreference = std::numeric_limits<int>::max() / 2;
  for (const auto& prefix : order) {
    const auto& sources = producers[prefix];
    const auto dist = hop_distances(topo, sources);
    for (NodeId r : topo.routers()) {
      NdnFibEntry entry{prefix, {}, 0};
      const Distance dr = dist[static_cast<std::size_t>(r)];
      const auto& ifaces = topo.node(r).ifaces;
      for (std::size_t i = 0; i < ifaces.size(); ++i) {
        const NodeId k = ifaces[i].neighbor;
        const bool is_source =
            std::find(sources.begin(), sources.end(), k) != sources.end();
        if (!topo.is_router(k) && !is_source) continue;
        IfaceRank rank{static_cast<IfaceId>(i), Color::Yellow, kUnreachablePreference};
        const Distance dk = dist[static_cast<std::size_t>(k)];
        if (dk != kInfinity) rank.routing_preference = static_cast<int>(dk) + 1;
        if (!topo.link(ifaces[i].link).up) {
          rank.color = Color::Red;
        } else if (dk != kInfinity && dr != kInfinity && dr != 0 && dk + 1 == dr) {
          rank.color = Color::Green;
        }
        entry.interfaces.push_back(rank);
      }
      entry.sort();
      if (!entry.interfaces.empty()) fibs[static_cast<std::size_t>(r)].push_back(std::move(entry));
    }
  }
  return fibs;
}

std::vector<Dib> build_dibs(const Topology& topo, std::span<const Announcement> anns) {
  std::vector<DibEntry> entries;
  for (const auto& ann : anns) {
    if (ann.kind != Announcement::Kind::AdnAnchor) continue;
    for (const auto& p : ann.prefixes) {
      auto it = std::find_if(entries.begin(), entries.end(),
                             [&](const DibEntry& e) { return e.prefix == p; });
      if (it == entries.end()) {
        entries.push_back(DibEntry{p, {}});
        it = std::prev(entries.end());
      }
      const Address a = anchor_address(ann.at);
      if (std::find(it->anchors.begin(), it->anchors.end(), a) == it->anchors.end()) {
        it->anchors.push_back(a);
      }
    }
  }
  return std::vector<Dib>(topo.node_count(), Dib(std::move(entries)));
}

std::vector<NodeId> content_holders(const NamePrefix& name, std::span<const Announcement> anns) {
  std::vector<NodeId> out;
  for (const auto& ann : anns) {
    for (const auto& p : ann.prefixes) {
      if (name_matches_prefix(name, p) &&
          std::find(out.begin(), out.end(), ann.at) == out.end()) {
        out.push_back(ann.at);
      }
    }
  }
  return out;
}

}  // namespace icnsim

#include "icnsim/topology.hpp"

#include <deque>

#include "icnsim/rng.hpp"

namespace icnsim {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Router: return "router";
    case NodeKind::Consumer: return "consumer";
    case NodeKind::Producer: return "producer";
  }
  return "?";
}

NodeId Topology::add_node(std::string name, NodeKind kind, double x, double y) {
  if (by_name_.count(name) != 0) throw ConfigError("duplicate node name: " + name);
  const auto id = static_cast<NodeId>(nodes_.size());
  by_name_.emplace(name, id);
  nodes_.push_back(Node{std::move(name), kind, x, y, {}});
  return id;
}

std::size_t Topology::add_link(NodeId a, NodeId b, SimTime delay, double rate_bps) {
  if (a == b) throw ConfigError("self link at node " + node(a).name);
  if (find_link(a, b)) {
    throw ConfigError("duplicate link " + node(a).name + "-" + node(b).name);
  }
  const std::size_t idx = links_.size();
  links_.push_back(Link{a, b, delay, rate_bps, true});
  nodes_.at(static_cast<std::size_t>(a)).ifaces.push_back({b, idx});
  nodes_.at(static_cast<std::size_t>(b)).ifaces.push_back({a, idx});
  return idx;
}

std::optional<NodeId> Topology::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

NodeId Topology::require(const std::string& name) const {
  auto id = find(name);
  if (!id) throw ConfigError("unknown node: " + name);
  return *id;
}

std::optional<std::size_t> Topology::find_link(NodeId a, NodeId b) const {
  for (const auto& f : node(a).ifaces) {
    if (f.neighbor == b) return f.link;
  }
  return std::nullopt;
}

std::optional<IfaceId> Topology::iface_to(NodeId node_id, NodeId neighbor) const {
  const auto& ifaces = node(node_id).ifaces;
  for (std::size_t i = 0; i < ifaces.size(); ++i) {
    if (ifaces[i].neighbor == neighbor) return static_cast<IfaceId>(i);
  }
  return std::nullopt;
}

NodeId Topology::neighbor(NodeId node_id, IfaceId iface) const {
  return node(node_id).ifaces.at(static_cast<std::size_t>(iface)).neighbor;
}

const Link& Topology::link_at(NodeId node_id, IfaceId iface) const {
  return links_.at(node(node_id).ifaces.at(static_cast<std::size_t>(iface)).link);
}

IfaceId Topology::peer_iface(NodeId node_id, IfaceId iface) const {
  return *iface_to(neighbor(node_id, iface), node_id);
}

std::vector<NodeId> Topology::routers() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == NodeKind::Router) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

bool Topology::routers_connected() const {
  const auto rs = routers();
  if (rs.size() <= 1) return true;
  std::vector<bool> seen(nodes_.size(), false);
  std::deque<NodeId> queue{rs.front()};
  seen[static_cast<std::size_t>(rs.front())] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (const auto& f : node(u).ifaces) {
      if (!links_[f.link].up || !is_router(f.neighbor)) continue;
      auto s = seen[static_cast<std::size_t>(f.neighbor)];
      if (s) continue;
      s = true;
      ++reached;
      queue.push_back(f.neighbor);
    }
  }
  return reached == rs.size();
}

GeneratedTopology generate_topology(int n, double side, double radius, std::uint64_t seed,
                                    SimTime delay, double rate_bps) {
  if (n < 1) throw ConfigError("topology needs at least one node");
  if (!(radius > 0)) throw ConfigError("connect radius must be positive");
  if (!(side > 0)) throw ConfigError("area side must be positive");
  constexpr int kMaxAttempts = 100;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    Rng rng(s);
    Topology t;
    for (int i = 0; i < n; ++i) {
      const double x = rng.uniform() * side;
      const double y = rng.uniform() * side;
      t.add_node("r" + std::to_string(i), NodeKind::Router, x, y);
    }
    const double r2 = radius * radius;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dx = t.node(i).x - t.node(j).x;
        const double dy = t.node(i).y - t.node(j).y;
        if (dx * dx + dy * dy <= r2) t.add_link(i, j, delay, rate_bps);
      }
    }
    if (t.routers_connected()) return {std::move(t), s, attempt + 1};
  }
  throw ConfigError("no connected topology after 100 attempts (n=" + std::to_string(n) +
                    ", side=" + std::to_string(side) + ", radius=" + std::to_string(radius) +
                    ")");
}

std::optional<SimTime> transmit(const Link& link, std::uint32_t size_bytes, SimTime now) {
  if (!link.up) return std::nullopt;
  return now + link.delay + static_cast<double>(size_bytes) * 8.0 / link.rate_bps;
}

}  // namespace icnsim

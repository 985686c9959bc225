#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "icnsim/packet.hpp"

namespace icnsim {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeKind : std::uint8_t { Router, Consumer, Producer };

std::string to_string(NodeKind k);

struct Link {
  NodeId a = 0;
  NodeId b = 0;
  SimTime delay = 0.015;
  double rate_bps = 1e9;
  bool up = true;
};

struct Iface {
  NodeId neighbor;
  std::size_t link;
};

struct Node {
  std::string name;
  NodeKind kind = NodeKind::Router;
  double x = 0;
  double y = 0;
  std::vector<Iface> ifaces;  // iface id = index; stable for the run
};

class Topology {
 public:
  NodeId add_node(std::string name, NodeKind kind, double x = 0, double y = 0);
  std::size_t add_link(NodeId a, NodeId b, SimTime delay = 0.015, double rate_bps = 1e9);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::optional<NodeId> find(const std::string& name) const;
  /// Like find(), throwing ConfigError naming the missing node.
  NodeId require(const std::string& name) const;

  const std::vector<Link>& links() const noexcept { return links_; }
  const Link& link(std::size_t idx) const { return links_.at(idx); }
  std::optional<std::size_t> find_link(NodeId a, NodeId b) const;
  void set_link_up(std::size_t idx, bool up) { links_.at(idx).up = up; }

  /// Interface at `node` that leads to `neighbor`, if adjacent.
  std::optional<IfaceId> iface_to(NodeId node, NodeId neighbor) const;
  NodeId neighbor(NodeId node, IfaceId iface) const;
  const Link& link_at(NodeId node, IfaceId iface) const;
  /// The far end's iface id for the same link.
  IfaceId peer_iface(NodeId node, IfaceId iface) const;

  std::vector<NodeId> routers() const;
  bool is_router(NodeId id) const { return node(id).kind == NodeKind::Router; }
  /// Whether every router can reach every other router over up links.
  bool routers_connected() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::unordered_map<std::string, NodeId> by_name_;
};

struct GeneratedTopology {
  Topology topology;
  std::uint64_t seed_used;
  int attempts;
};

/// `n` routers uniform over a side x side square; routers within `radius`
/// meters are linked. Disconnected draws are retried with seed+1 up to 100 times.
GeneratedTopology generate_topology(int n, double side, double radius, std::uint64_t seed,
                                    SimTime delay = 0.015, double rate_bps = 1e9);

/// Arrival time of a packet of `size_bytes` sent over `link` at `now`, or
/// nothing when the link is down at send time.
std::optional<SimTime> transmit(const Link& link, std::uint32_t size_bytes, SimTime now);

}  // namespace icnsim

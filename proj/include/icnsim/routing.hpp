#pragma once

#include <span>
#include <string>
#include <vector>

#include "icnsim/adn_router.hpp"
#include "icnsim/ndn_router.hpp"
#include "icnsim/topology.hpp"

namespace icnsim {

/// A node claiming it serves everything under some name prefixes.
/// NDN announcements populate name-prefix FIBs; ADN anchor announcements
/// populate address FIBs (for the anchor's address prefix) and DIBs.
struct Announcement {
  enum class Kind : std::uint8_t { NdnPrefix, AdnAnchor };
  Kind kind = Kind::NdnPrefix;
  NodeId at = 0;
  std::vector<NamePrefix> prefixes;
  AddressPrefix address_prefix{};  // AdnAnchor only

  static Announcement ndn(NodeId at, NamePrefix prefix);
  static Announcement anchor(NodeId at, std::vector<NamePrefix> served);
};

/// Scripted control-plane event.
struct LinkEvent {
  enum class Action : std::uint8_t { Down, Up, SetColor, SetDistance, RecomputeRoutes };
  SimTime time = 0;
  Action action = Action::Down;
  NodeId a = -1;  // Down/Up: link ends. SetColor/SetDistance: the router.
  NodeId b = -1;  // Down/Up: link end. SetColor/SetDistance: neighbor the iface leads to.
  NamePrefix prefix;    // SetColor
  Color color = Color::Yellow;
  NodeId anchor = -1;   // SetDistance: anchor router whose address prefix is affected
  Distance distance = 0;
};

std::string to_string(LinkEvent::Action a);

/// Hop distance from every node to the nearest of `sources` over up links.
/// Only routers (and the sources themselves) relay; other nodes are leaves.
std::vector<Distance> hop_distances(const Topology& topo, std::span<const NodeId> sources);

/// h_i(a, k) = 1 + hop distance from neighbor k to the anchor, per router.
std::vector<std::vector<AdnFibEntry>> compute_adn_fibs(const Topology& topo,
                                                       std::span<const Announcement> anns);

/// Interfaces on shortest paths Green (preference = path length), every
/// other up interface Yellow, down interfaces Red.
std::vector<std::vector<NdnFibEntry>> compute_ndn_fibs(const Topology& topo,
                                                       std::span<const Announcement> anns);

/// Per-node copy of the global name-prefix to anchor map.
std::vector<Dib> build_dibs(const Topology& topo, std::span<const Announcement> anns);

/// Nodes able to answer for `name`: NDN producers of a matching prefix and
/// ADN anchors of a matching prefix.
std::vector<NodeId> content_holders(const NamePrefix& name, std::span<const Announcement> anns);

}  // namespace icnsim

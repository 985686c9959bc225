#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "icnsim/name.hpp"

namespace icnsim {

enum class AddressRole : std::uint8_t { RouterId, Anchor, MulticastGroup, ConsumerLocal };

struct Address {
  std::uint64_t value = 0;
  AddressRole role = AddressRole::RouterId;

  friend auto operator<=>(const Address&, const Address&) = default;
};

std::string to_string(const Address& a);
std::string to_string(AddressRole r);

/// Integer-range prefix over the 64-bit address space.
struct AddressPrefix {
  std::uint64_t value = 0;
  unsigned bits = 64;

  bool contains(std::uint64_t addr) const noexcept;
  friend auto operator<=>(const AddressPrefix&, const AddressPrefix&) = default;
};

/// Router addresses are the node index offset into a reserved block so they
/// never collide with small literals used by tests.
inline constexpr std::uint64_t kRouterAddressBase = 0x0A00'0000'0000'0000ULL;

inline Address router_address(int node) {
  return Address{kRouterAddressBase + static_cast<std::uint64_t>(node), AddressRole::RouterId};
}
inline Address anchor_address(int node) {
  return Address{kRouterAddressBase + static_cast<std::uint64_t>(node), AddressRole::Anchor};
}
/// The consumer-scope source address an ingress router stamps on unicast
/// Interests of all of its local consumers.
inline Address consumer_scope_address(int node) {
  return Address{kRouterAddressBase + static_cast<std::uint64_t>(node), AddressRole::ConsumerLocal};
}

/// 64-bit FNV-1a over the name bytes.
std::uint64_t stable_name_hash(std::string_view bytes) noexcept;

/// Group address a(g) derived from a multicast group name.
/// Throws NameError when the name is not a multicast name.
Address multicast_address_of(const NamePrefix& group, const NamingConvention& conv = {});

}  // namespace icnsim

template <>
struct std::hash<icnsim::Address> {
  std::size_t operator()(const icnsim::Address& a) const noexcept {
    return std::hash<std::uint64_t>{}(a.value * 4 + static_cast<std::uint64_t>(a.role));
  }
};

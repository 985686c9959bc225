#include "icnsim/address.hpp"

#include <cstdio>

namespace icnsim {

bool AddressPrefix::contains(std::uint64_t addr) const noexcept {
  if (bits == 0) return true;
  if (bits >= 64) return addr == value;
  const std::uint64_t mask = ~std::uint64_t{0} << (64 - bits);
  return (addr & mask) == (value & mask);
}

std::string to_string(AddressRole r) {
  switch (r) {
    case AddressRole::RouterId: return "router";
    case AddressRole::Anchor: return "anchor";
    case AddressRole::MulticastGroup: return "group";
    case AddressRole::ConsumerLocal: return "local";
  }
  return "?";
}

std::string to_string(const Address& a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(a.value));
  return to_string(a.role) + ":" + buf;
}

std::uint64_t stable_name_hash(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Address multicast_address_of(const NamePrefix& group, const NamingConvention& conv) {
  if (!is_multicast_name(group, conv)) {
    throw NameError("not a multicast group name: " + group.to_uri());
  }
  return Address{stable_name_hash(group.key()), AddressRole::MulticastGroup};
}

}  // namespace icnsim

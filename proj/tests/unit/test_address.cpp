#include <doctest.h>

#include "icnsim/address.hpp"

using namespace icnsim;

TEST_CASE("router, anchor and consumer-scope addresses share the node block") {
  CHECK(router_address(5).value == kRouterAddressBase + 5);
  CHECK(anchor_address(5).value == router_address(5).value);
  CHECK(anchor_address(5) != router_address(5));
  CHECK(consumer_scope_address(5).role == AddressRole::ConsumerLocal);
}

TEST_CASE("address prefixes") {
  const AddressPrefix exact{anchor_address(3).value, 64};
  CHECK(exact.contains(anchor_address(3).value));
  CHECK_FALSE(exact.contains(anchor_address(4).value));
  const AddressPrefix block{kRouterAddressBase, 8};
  CHECK(block.contains(anchor_address(1234).value));
  CHECK(AddressPrefix{0, 0}.contains(42));
}

TEST_CASE("multicast addresses derive from the group name") {
  const auto g = multicast_address_of(NamePrefix::parse("/mcast/g"));
  const auto h = multicast_address_of(NamePrefix::parse("/mcast/h"));
  CHECK(g.role == AddressRole::MulticastGroup);
  CHECK(g != h);
  CHECK(g == multicast_address_of(NamePrefix::parse("/mcast/g")));
  CHECK_THROWS_AS(multicast_address_of(NamePrefix::parse("/p1")), NameError);
  CHECK(stable_name_hash("") == 0xcbf29ce484222325ULL);
}

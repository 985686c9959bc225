#include <doctest.h>

#include "icnsim/adn_router.hpp"

using namespace icnsim;

namespace {

// Node ids as in the fig5-adn fixture.
constexpr NodeId kX = 0, kU = 1, kV = 2, kZ = 3, kN = 7;

const ContentName kO1 = ContentName::parse("/mcast/g/o1");
const Address kGroup = multicast_address_of(NamePrefix::parse("/mcast/g"));

std::shared_ptr<const Dib> fig5_dib() {
  return std::make_shared<const Dib>(
      std::vector<DibEntry>{{NamePrefix::parse("/mcast/g"), {anchor_address(kN)}}});
}

AdnRouter make(NodeId id, std::vector<bool> consumer, std::map<IfaceId, Distance> to_n,
               AdnConfig cfg = {}) {
  AdnRouter r(id, cfg, std::move(consumer));
  r.set_fib({AdnFibEntry{AddressPrefix{anchor_address(kN).value, 64}, std::move(to_n)}});
  r.set_dib(fig5_dib());
  return r;
}

RouterInterest interest(Distance h, std::uint64_t f, TraceId t = 1) {
  return RouterInterest(kO1, kGroup, anchor_address(kN), h, f, t);
}

// u: 0 = x, 1 = v, 2 = w
AdnRouter router_u() { return make(kU, {false, false, false}, {{0, 4}, {1, 4}, {2, 2}}); }

}  // namespace

TEST_CASE("IFR: u forwards x's Interest toward w, rewriting h 3 -> 2") {
  auto u = router_u();
  const auto a = u.process_interest(interest(3, 1), 0, 3.015);
  REQUIRE(a.kind == AdnActionKind::Forward);
  CHECK(a.iface == 2);
  CHECK(a.interest->distance() == 2);
  CHECK(a.interest->flow_state() == 1);
  const SatEntry* s = u.sat_find(kGroup);
  REQUIRE(s != nullptr);
  CHECK(s->flow_state == 1);
  CHECK(s->pending);
  CHECK(s->origins.at(0) == 3);
}

TEST_CASE("IAR: u aggregates v's Interest with the same flow state") {
  auto u = router_u();
  u.process_interest(interest(3, 1, 1), 0, 3.015);
  const auto a = u.process_interest(interest(3, 1, 3), 1, 3.015);
  CHECK(a.kind == AdnActionKind::Aggregate);
  CHECK(u.sat_find(kGroup)->origins.size() == 2);
  CHECK(u.sat_size() == 1);
}

TEST_CASE("INR: x NACKs z's Interest because 3 is not greater than h_x(n,u) = 3") {
  // x: 0 = a (consumer), 1 = u, 2 = z
  auto x = make(kX, {true, false, false}, {{1, 3}, {2, 5}});
  const auto a = x.process_interest(interest(3, 1), 2, 3.015);
  CHECK(a.kind == AdnActionKind::Nack);
  CHECK(a.nack_code == NackCode::NoRoute);
  CHECK(a.iface == 2);
  CHECK(x.sat_size() == 0);
}

TEST_CASE("ingress binds the name to anchor n and sends h = best distance, f = 1") {
  auto x = make(kX, {true, false, false}, {{1, 3}, {2, 5}});
  CHECK(x.bind_name_to_anchor(kO1) == anchor_address(kN));
  const auto a = x.ingress(kO1, 0, 1, 3.0);
  REQUIRE(a.kind == AdnActionKind::Forward);
  CHECK(a.iface == 1);
  CHECK(a.interest->distance() == 3);
  CHECK(a.interest->flow_state() == 1);
  CHECK(a.interest->source() == kGroup);
  CHECK(x.pending_local() == 1);
}

TEST_CASE("stale FIB at z: ingress forwards to x with h = 3") {
  // z: 0 = b (consumer), 1 = v, 2 = x; stale h_z(n,x) = 3
  auto z = make(kZ, {true, false, false}, {{1, 4}, {2, 3}});
  const auto a = z.ingress(kO1, 0, 2, 3.0);
  REQUIRE(a.kind == AdnActionKind::Forward);
  CHECK(a.iface == 2);
  CHECK(a.interest->distance() == 3);
}

TEST_CASE("Data fans out at u to x and v with their labels") {
  auto u = router_u();
  u.process_interest(interest(3, 1, 1), 0, 3.015);
  u.process_interest(interest(3, 1, 3), 1, 3.015);
  auto data = ResponsePacket::data(kO1, kGroup, 1, 1024, 1);
  data.label = 2;
  const auto r = u.process_response(data, 2, 3.09);
  REQUIRE(r.forward.size() == 2);
  CHECK(r.forward[0] == std::pair<IfaceId, Distance>{0, 3});
  CHECK(r.forward[1] == std::pair<IfaceId, Distance>{1, 3});
  CHECK_FALSE(u.sat_find(kGroup)->pending);
  // next object of the flow needs f = 2
  CHECK(u.process_interest(interest(3, 2), 0, 4.0).kind == AdnActionKind::Forward);
}

TEST_CASE("responses never go back to origins with labels not above the incoming label") {
  auto u = router_u();
  u.process_interest(interest(3, 1), 0, 0);
  auto data = ResponsePacket::data(kO1, kGroup, 1, 1024, 1);
  data.label = 3;
  const auto r = u.process_response(data, 2, 0.1);
  CHECK(r.forward.empty());
  CHECK(r.dropped);
}

TEST_CASE("invalid flow state is NACKed") {
  auto u = router_u();
  u.process_interest(interest(3, 1), 0, 0);
  const auto a = u.process_interest(interest(3, 3), 1, 0.01);
  CHECK(a.kind == AdnActionKind::Nack);
  CHECK(a.nack_code == NackCode::InvalidFlowState);
}

TEST_CASE("the anchor answers; a router that is not an anchor for the name says NoData") {
  AdnRouter n(kN, {}, {false, false});
  n.set_dib(fig5_dib());
  const auto a = n.process_interest(interest(1, 1), 0, 0);
  CHECK(a.kind == AdnActionKind::RespondData);
  CHECK(a.produced_locally);
  const auto other = RouterInterest(ContentName::parse("/mcast/h/o1"),
                                    multicast_address_of(NamePrefix::parse("/mcast/h")),
                                    anchor_address(kN), 1, 1, 2);
  CHECK(n.process_interest(other, 0, 0).nack_code == NackCode::NoData);
}

TEST_CASE("no DIB binding or no finite distance -> NoRoute at ingress") {
  AdnRouter lonely(kX, {}, {true, false});
  lonely.set_dib(std::make_shared<const Dib>());
  const auto a = lonely.ingress(kO1, 0, 1, 0);
  CHECK(a.kind == AdnActionKind::Nack);
  CHECK(a.nack_code == NackCode::NoRoute);

  auto cut = make(kX, {true, false}, {{1, 3}});
  cut.set_iface_up(1, false);
  CHECK(cut.ingress(kO1, 0, 1, 0).kind == AdnActionKind::Nack);
}

TEST_CASE("unicast Interests carry flow state 0 and are always forwarded") {
  const auto name = ContentName::parse("/p7/o1");
  CHECK_THROWS_AS(RouterInterest(name, consumer_scope_address(0), anchor_address(kN), 3, 1, 1),
                  std::invalid_argument);
  auto u = router_u();
  const RouterInterest i1(name, consumer_scope_address(0), anchor_address(kN), 3, 0, 1);
  const RouterInterest i2(name, consumer_scope_address(0), anchor_address(kN), 3, 0, 2);
  CHECK(u.process_interest(i1, 0, 0).kind == AdnActionKind::Forward);
  CHECK(u.process_interest(i2, 0, 0).kind == AdnActionKind::Forward);
  CHECK(u.sat_size() == 1);
}

TEST_CASE("SAT entries age out after the timeout") {
  auto u = router_u();
  u.process_interest(interest(3, 1), 0, 1.0);
  CHECK(u.sat_gc(5.9).empty());
  const auto gone = u.sat_gc(6.0);
  REQUIRE(gone.size() == 1);
  CHECK(gone[0].source == kGroup);
  CHECK(u.sat_size() == 0);
}

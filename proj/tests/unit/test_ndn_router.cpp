#include <doctest.h>

#include "icnsim/ndn_router.hpp"

using namespace icnsim;

namespace {

const NamePrefix kG = NamePrefix::parse("/mcast/g");
const ContentName kO1 = ContentName::parse("/mcast/g/o1");

NdnFibEntry entry(std::vector<IfaceRank> ranks) {
  NdnFibEntry e;
  e.prefix = kG;
  e.interfaces = std::move(ranks);
  return e;
}

NdnRouter router(std::size_t ifaces, std::vector<NdnFibEntry> fib, NdnConfig cfg = {}) {
  std::vector<bool> consumer(ifaces, false);
  consumer[0] = true;  // iface 0 faces a consumer in every fixture here
  NdnRouter r(0, cfg, consumer);
  r.set_fib(std::move(fib));
  return r;
}

}  // namespace

TEST_CASE("FIB entries sort green, yellow, red, then preference, then iface") {
  auto e = entry({{3, Color::Red, 1},
                  {2, Color::Yellow, 5},
                  {4, Color::Yellow, 2},
                  {1, Color::Green, 9},
                  {5, Color::Yellow, 2}});
  e.sort();
  std::vector<IfaceId> order;
  for (const auto& r : e.interfaces) order.push_back(r.iface);
  CHECK(order == std::vector<IfaceId>{1, 4, 5, 2, 3});
}

TEST_CASE("x forwards a's Interest on its only usable Yellow iface, then aggregates z's") {
  // x: iface 0 = a, 1 = u (Yellow), 2 = z (Yellow, worse preference), 3 = k (Red).
  auto x = router(4, {entry({{1, Color::Yellow, 4}, {2, Color::Yellow, 5}, {3, Color::Red, 1}})});
  const auto fwd = x.process_interest({kO1, 111, 1}, 0, 3.0);
  CHECK(fwd.kind == NdnActionKind::Forward);
  CHECK(fwd.ifaces == std::vector<IfaceId>{1});
  const auto agg = x.process_interest({kO1, 222, 2}, 2, 3.03);
  CHECK(agg.kind == NdnActionKind::Aggregate);
  REQUIRE(x.pit_find(kO1) != nullptr);
  CHECK(x.pit_find(kO1)->records.size() == 2);
  CHECK(x.pit_size() == 1);
}

TEST_CASE("same nonce is NACKed as duplicate on any iface") {
  auto r = router(3, {entry({{1, Color::Green, 1}})});
  REQUIRE(r.process_interest({kO1, 7, 1}, 0, 0).kind == NdnActionKind::Forward);
  const auto dup = r.process_interest({kO1, 7, 2}, 2, 0.1);
  CHECK(dup.kind == NdnActionKind::NackDuplicate);
  CHECK(dup.ifaces == std::vector<IfaceId>{2});
}

TEST_CASE("cache hit and local producer respond on the incoming iface") {
  auto r = router(2, {entry({{1, Color::Green, 1}})});
  r.cs().insert(kO1, 1024);
  const auto hit = r.process_interest({kO1, 1, 1}, 0, 0);
  CHECK(hit.kind == NdnActionKind::RespondData);
  CHECK(hit.ifaces == std::vector<IfaceId>{0});
  CHECK_FALSE(hit.produced_locally);

  auto p = router(2, {});
  p.add_local_prefix(NamePrefix::parse("/p0"));
  const auto prod = p.process_interest({ContentName::parse("/p0/o3"), 1, 1}, 1, 0);
  CHECK(prod.kind == NdnActionKind::RespondData);
  CHECK(prod.produced_locally);
}

TEST_CASE("no route: missing FIB entry, only Red ifaces, or only the incoming iface") {
  auto none = router(2, {});
  CHECK(none.process_interest({kO1, 1, 1}, 0, 0).kind == NdnActionKind::NackNoRoute);
  auto red = router(2, {entry({{1, Color::Red, 1}})});
  CHECK(red.process_interest({kO1, 1, 1}, 0, 0).kind == NdnActionKind::NackNoRoute);
  auto back = router(2, {entry({{1, Color::Green, 1}})});
  CHECK(back.process_interest({kO1, 1, 1}, 1, 0).kind == NdnActionKind::NackNoRoute);
  CHECK(back.pit_size() == 0);
}

TEST_CASE("multipath forwards on every member of the best color class") {
  NdnConfig cfg;
  cfg.multipath = true;
  auto r = router(5, {entry({{1, Color::Green, 3}, {2, Color::Green, 4}, {3, Color::Yellow, 1}})},
                  cfg);
  const auto a = r.process_interest({kO1, 1, 1}, 0, 0);
  CHECK(a.ifaces == std::vector<IfaceId>{1, 2});
}

TEST_CASE("Data fans out to every PIT record and deletes the entry") {
  auto r = router(4, {entry({{2, Color::Yellow, 1}})});
  r.process_interest({kO1, 1, 1}, 1, 0);
  r.process_interest({kO1, 2, 2}, 3, 0);
  const auto res = r.process_response(ResponsePacket::data(kO1, {}, 0, 1024, 1), 2, 0.1);
  CHECK(res.matched);
  REQUIRE(res.downstream.size() == 2);
  CHECK(res.downstream[0].in_iface == 1);
  CHECK(res.downstream[1].in_iface == 3);
  CHECK(r.pit_size() == 0);
  // Yellow + Data -> Green
  CHECK(r.fib_match(kO1)->find(2)->color == Color::Green);

  const auto stray = r.process_response(ResponsePacket::data(kO1, {}, 0, 1024, 1), 2, 0.2);
  CHECK_FALSE(stray.matched);
  CHECK(stray.downstream.empty());
}

TEST_CASE("edge caching stores only next to consumers; on-path everywhere; NACKs never") {
  auto relay = router(3, {entry({{2, Color::Green, 1}})});
  relay.process_interest({kO1, 1, 1}, 1, 0);
  CHECK_FALSE(relay.process_response(ResponsePacket::data(kO1, {}, 0, 1024, 1), 2, 0).cached);

  auto edge = router(3, {entry({{2, Color::Green, 1}})});
  edge.process_interest({kO1, 1, 1}, 0, 0);
  CHECK(edge.process_response(ResponsePacket::data(kO1, {}, 0, 1024, 1), 2, 0).cached);

  NdnConfig on_path;
  on_path.caching = CachingMode::OnPath;
  auto path = router(3, {entry({{2, Color::Green, 1}})}, on_path);
  path.process_interest({kO1, 1, 1}, 1, 0);
  CHECK(path.process_response(ResponsePacket::data(kO1, {}, 0, 1024, 1), 2, 0).cached);
  path.process_interest({ContentName::parse("/mcast/g/o2"), 2, 2}, 1, 0);
  const auto nack = path.process_response(
      ResponsePacket::nack(ContentName::parse("/mcast/g/o2"), {}, 0, NackCode::NoData, 2), 2, 0);
  CHECK(nack.matched);
  CHECK_FALSE(nack.cached);

  NdnConfig off;
  off.caching = CachingMode::None;
  auto none = router(3, {entry({{2, Color::Green, 1}})}, off);
  none.process_interest({kO1, 1, 1}, 0, 0);
  CHECK_FALSE(none.process_response(ResponsePacket::data(kO1, {}, 0, 1024, 1), 2, 0).cached);
}

TEST_CASE("PIT expiry is inclusive and demotes the out iface when the entry dies") {
  auto r = router(3, {entry({{2, Color::Green, 1}})});
  CHECK(r.pit_expire(1.0).empty());
  r.process_interest({kO1, 9, 1}, 0, 0.0);  // expires at 4.0
  CHECK(r.pit_expire(3.999).empty());
  const auto gone = r.pit_expire(4.0);
  REQUIRE(gone.size() == 1);
  CHECK(gone[0].nonce == 9);
  CHECK(r.pit_size() == 0);
  CHECK(r.fib_match(kO1)->find(2)->color == Color::Yellow);
}

TEST_CASE("rank transitions") {
  auto r = router(4, {entry({{1, Color::Green, 1}, {2, Color::Yellow, 1}, {3, Color::Green, 2}})});
  CHECK(r.rank_update(kG, 1, RankEvent::InterestTimeout) == Color::Yellow);
  CHECK(r.rank_update(kG, 3, RankEvent::LinkDown) == Color::Red);
  CHECK(r.rank_update(kG, 3, RankEvent::DataReceived) == Color::Red);
  CHECK(r.rank_update(kG, 3, RankEvent::LinkUp) == Color::Yellow);
  CHECK(r.rank_update(kG, 2, RankEvent::DataReceived) == Color::Green);
  CHECK(r.rank_update(kG, 2, RankEvent::NackDuplicate) == Color::Yellow);
  CHECK(r.rank_update(kG, 2, RankEvent::NackNoData) == Color::Yellow);
  CHECK_FALSE(r.rank_update(kG, 9, RankEvent::LinkDown).has_value());
  r.link_state_changed(1, false);
  CHECK(r.fib_match(kO1)->find(1)->color == Color::Red);
  CHECK(r.fib_match(kO1)->interfaces.back().color == Color::Red);
}

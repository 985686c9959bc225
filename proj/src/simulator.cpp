#include "icnsim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "icnsim/rng.hpp"

namespace icnsim {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pending: return "pending";
    case Outcome::Data: return "data";
    case Outcome::Nack: return "nack";
    case Outcome::Expired: return "expired";
  }
  return "?";
}

std::vector<std::string> RunResult::node_names() const {
  std::vector<std::string> names;
  for (const auto& n : initial_topology.nodes()) names.push_back(n.name);
  return names;
}

std::string RunResult::trace_text() const {
  const auto names = node_names();
  std::string out;
  for (const auto& r : trace) {
    out += format_trace_line(r, names);
    out += '\n';
  }
  return out;
}

namespace {

enum class EventKind : std::uint8_t {
  Packet,
  Request,
  StreamRequest,
  PitTimer,
  LocalTimer,
  ConsumerTimeout,
  Link,
  Sample,
};

struct Event {
  SimTime time = 0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::Sample;
  NodeId node = -1;
  IfaceId iface = 0;
  std::shared_ptr<const Packet> packet;
  std::size_t index = 0;  // request / stream / link-event / trace index
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    return a.seq > b.seq;
  }
};

struct Endpoint {
  std::unordered_map<ContentName, std::vector<TraceId>> pending;
};

struct PendingRequest {
  NodeId node;
  bool local;
  ContentName name;
};

}  // namespace

struct Simulator::Impl {
  Scenario sc;
  RunOptions opt;
  Topology topo;
  std::vector<Announcement> anns;
  std::uint64_t topo_seed = 0;
  NamingConvention naming;
  PacketSizeModel sizes;

  std::vector<std::unique_ptr<NdnRouter>> ndn;
  std::vector<std::unique_ptr<AdnRouter>> adn;
  std::shared_ptr<const Dib> dib;
  std::vector<std::vector<NamePrefix>> produced;  // NDN producer prefixes per node
  std::vector<Endpoint> consumer_ep;
  std::vector<Endpoint> local_ep;
  std::vector<EventSpec> events;
  std::vector<PendingRequest> scripted;

  std::optional<ZipfSampler> zipf;
  std::optional<Catalog> catalog;
  std::vector<RequestStream> streams;
  std::vector<NodeId> stream_node;

  std::vector<Event> heap;
  std::uint64_t seq = 0;
  SimTime now = 0;
  Rng nonce_rng{1};

  RunResult result;

  Impl(const Scenario& scenario, RunOptions options);
  void setup();
  void install_fibs();

  void schedule(Event e);
  void schedule_at(SimTime t, EventKind kind, NodeId node, std::size_t index = 0) {
    Event e;
    e.time = t;
    e.kind = kind;
    e.node = node;
    e.index = index;
    schedule(std::move(e));
  }
  void record(TraceKind kind, NodeId node, NodeId peer, const std::string& name, TraceId trace,
              std::int64_t a = -1, std::int64_t b = -1, std::uint64_t flow = 0,
              std::string detail = {});
  void bump(const std::string& counter, std::uint64_t by = 1) { result.counters[counter] += by; }
  NodeId peer_of(NodeId node, IfaceId iface) const {
    return iface == kLocalFace ? kLocalPeer : topo.neighbor(node, iface);
  }

  void send(NodeId node, IfaceId iface, Packet packet);
  void send_response(NodeId node, IfaceId iface, const ResponsePacket& resp);
  void issue_request(NodeId node, bool local, const ContentName& name);
  void complete(NodeId node, bool local, const ResponsePacket& resp);

  void on_packet(const Event& e);
  void ndn_interest(NodeId node, IfaceId iface, const NdnInterest& interest);
  void ndn_response(NodeId node, IfaceId iface, const ResponsePacket& resp);
  void adn_action(NodeId node, IfaceId iface, const AdnAction& act, const ContentName& name,
                  const RouterInterest* received, TraceId trace, bool ingress);
  void adn_response(NodeId node, IfaceId iface, const ResponsePacket& resp);
  void producer_interest(NodeId node, IfaceId iface, const NdnInterest& interest);
  void apply_link_event(const EventSpec& ev);
  void sample();

  void process(const Event& e);
  RunResult run();
};

Simulator::Impl::Impl(const Scenario& scenario, RunOptions options)
    : sc(scenario), opt(options) {
  naming.multicast_marker = sc.multicast_marker;
  BuiltNetwork net = build_network(sc);
  topo = std::move(net.topology);
  anns = std::move(net.announcements);
  topo_seed = net.topology_seed;
  nonce_rng = Rng(derive_seed(sc.seed, 0x6e6f6e6365ULL));
  setup();
}

void Simulator::Impl::setup() {
  const std::size_t n = topo.node_count();
  ndn.resize(n);
  adn.resize(n);
  produced.resize(n);
  consumer_ep.resize(n);
  local_ep.resize(n);

  for (NodeId r : topo.routers()) {
    const auto& node = topo.node(r);
    std::vector<bool> consumer_facing(node.ifaces.size(), false);
    for (std::size_t i = 0; i < node.ifaces.size(); ++i) {
      consumer_facing[i] = topo.node(node.ifaces[i].neighbor).kind == NodeKind::Consumer;
    }
    if (sc.plane == Plane::Ndn) {
      NdnConfig cfg;
      cfg.pit_lifetime = sc.pit_lifetime;
      cfg.caching = sc.caching;
      cfg.multipath = sc.ndn_multipath;
      cfg.cs_capacity = sc.cs_capacity;
      ndn[static_cast<std::size_t>(r)] = std::make_unique<NdnRouter>(r, cfg, consumer_facing);
    } else {
      AdnConfig cfg;
      cfg.sat_timeout = sc.sat_timeout;
      cfg.consumer_timeout = sc.pit_lifetime;
      cfg.caching = sc.caching;
      cfg.cs_capacity = sc.cs_capacity;
      cfg.naming = naming;
      adn[static_cast<std::size_t>(r)] = std::make_unique<AdnRouter>(r, cfg, consumer_facing);
    }
  }

  for (const auto& a : anns) {
    if (a.kind != Announcement::Kind::NdnPrefix) continue;
    auto& list = produced[static_cast<std::size_t>(a.at)];
    list.insert(list.end(), a.prefixes.begin(), a.prefixes.end());
    if (topo.is_router(a.at) && ndn[static_cast<std::size_t>(a.at)]) {
      for (const auto& p : a.prefixes) ndn[static_cast<std::size_t>(a.at)]->add_local_prefix(p);
    }
  }
  auto dibs = build_dibs(topo, anns);
  dib = std::make_shared<const Dib>(dibs.empty() ? Dib{} : dibs.front());
  install_fibs();

  result.scenario = sc;
  result.initial_topology = topo;
  result.announcements = anns;
  result.topology_seed = topo_seed;
  result.routers = topo.routers();

  // Control-plane script first so same-time events precede traffic.
  events = [&] {
    std::vector<EventSpec> evs = sc.events;
    std::stable_sort(evs.begin(), evs.end(),
                     [](const EventSpec& x, const EventSpec& y) { return x.time < y.time; });
    return evs;
  }();
  for (std::size_t i = 0; i < events.size(); ++i) {
    schedule_at(events[i].time, EventKind::Link, -1, i);
  }

  for (const auto& req : sc.workload.requests) {
    const NodeId node = topo.require(req.node);
    const bool local = topo.is_router(node);
    scripted.push_back({node, local, req.name});
    schedule_at(req.time, EventKind::Request, node, scripted.size() - 1);
  }
  for (const auto& g : sc.workload.groups) {
    for (const auto& m : g.members) {
      const NodeId node = topo.require(m);
      const bool local = topo.is_router(node);
      for (std::uint64_t k = 0; k < g.flow_length; ++k) {
        auto name = ContentName::parse(g.group.key() + "/o" + std::to_string(k + 1));
        scripted.push_back({node, local, name});
        schedule_at(g.start + static_cast<double>(k) * g.interval, EventKind::Request, node,
                    scripted.size() - 1);
      }
    }
  }

  if (sc.topology.generated && sc.local_producers && sc.workload.rate > 0) {
    const auto routers = topo.routers();
    zipf.emplace(sc.workload.zipf, sc.workload.catalog);
    catalog.emplace(routers, sc.workload.catalog);
    const std::uint64_t wseed = sc.workload.seed.value_or(sc.seed);
    streams.reserve(routers.size());
    for (NodeId r : routers) {
      streams.emplace_back(*zipf, *catalog, sc.workload.rate,
                           derive_seed(wseed, static_cast<std::uint64_t>(r) + 1));
      stream_node.push_back(r);
    }
    for (std::size_t i = 0; i < streams.size(); ++i) {
      auto req = streams[i].next();
      if (req.time <= sc.horizon) {
        scripted.push_back({stream_node[i], true, req.name});
        Event e;
        e.time = req.time;
        e.kind = EventKind::StreamRequest;
        e.node = stream_node[i];
        e.index = i;
        e.iface = static_cast<IfaceId>(scripted.size() - 1);
        schedule(std::move(e));
      }
    }
  }

  if (sc.sample_interval > 0) schedule_at(0.0, EventKind::Sample, -1, 0);
}

void Simulator::Impl::install_fibs() {
  if (sc.plane == Plane::Ndn) {
    auto fibs = compute_ndn_fibs(topo, anns);
    for (NodeId r : topo.routers()) {
      ndn[static_cast<std::size_t>(r)]->set_fib(std::move(fibs[static_cast<std::size_t>(r)]));
    }
  } else {
    auto fibs = compute_adn_fibs(topo, anns);
    for (NodeId r : topo.routers()) {
      auto& router = *adn[static_cast<std::size_t>(r)];
      router.set_fib(std::move(fibs[static_cast<std::size_t>(r)]));
      router.set_dib(dib);
      const auto& ifaces = topo.node(r).ifaces;
      for (std::size_t i = 0; i < ifaces.size(); ++i) {
        router.set_iface_up(static_cast<IfaceId>(i), topo.link(ifaces[i].link).up);
      }
    }
  }
}

void Simulator::Impl::schedule(Event e) {
  if (e.time < now) throw std::logic_error("event scheduled in the past");
  e.seq = seq++;
  heap.push_back(std::move(e));
  std::push_heap(heap.begin(), heap.end(), Later{});
}

void Simulator::Impl::record(TraceKind kind, NodeId node, NodeId peer, const std::string& name,
                             TraceId trace, std::int64_t a, std::int64_t b, std::uint64_t flow,
                             std::string detail) {
  if (!opt.collect_trace) return;
  result.trace.push_back(TraceRecord{now, kind, node, peer, name, trace, a, b, flow,
                                     std::move(detail)});
}

void Simulator::Impl::send(NodeId node, IfaceId iface, Packet packet) {
  const Link& link = topo.link_at(node, iface);
  const auto arrival = transmit(link, sizes.size_of(packet), now);
  if (!arrival) {
    bump("drop_link_down");
    TraceId trace = 0;
    std::string name;
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, NdnInterest>) {
            trace = p.trace_id;
            name = p.name.key();
          } else {
            trace = p.trace_id();
            name = p.name().key();
          }
        },
        packet);
    record(TraceKind::Drop, node, topo.neighbor(node, iface), name, trace, -1, -1, 0,
           "link-down");
    return;
  }
  Event e;
  e.time = *arrival;
  e.kind = EventKind::Packet;
  e.node = topo.neighbor(node, iface);
  e.iface = topo.peer_iface(node, iface);
  e.packet = std::make_shared<const Packet>(std::move(packet));
  schedule(std::move(e));
}

void Simulator::Impl::send_response(NodeId node, IfaceId iface, const ResponsePacket& resp) {
  if (iface == kLocalFace) {
    complete(node, true, resp);
  } else {
    send(node, iface, resp);
  }
}

void Simulator::Impl::issue_request(NodeId node, bool local, const ContentName& name) {
  RequestRecord rec;
  rec.id = result.requests.size() + 1;
  rec.endpoint = node;
  rec.local_app = local;
  rec.ingress = local ? node : topo.neighbor(node, 0);
  rec.name = name;
  rec.issue = now;
  result.requests.push_back(rec);
  bump("requests");

  const std::uint64_t nonce = nonce_rng.next_u64();
  record(TraceKind::Request, node, local ? kLocalPeer : rec.ingress, name.key(), rec.id);
  auto& ep = local ? local_ep[static_cast<std::size_t>(node)]
                   : consumer_ep[static_cast<std::size_t>(node)];
  ep.pending[name].push_back(rec.id);
  schedule_at(now + sc.pit_lifetime, EventKind::ConsumerTimeout, node, rec.id);

  NdnInterest interest{name, nonce, rec.id};
  if (!local) {
    if (topo.node(node).ifaces.empty()) throw ConfigError("consumer has no link");
    send(node, 0, interest);
    return;
  }
  if (sc.plane == Plane::Ndn) {
    ndn_interest(node, kLocalFace, interest);
  } else {
    auto& r = *adn[static_cast<std::size_t>(node)];
    const AdnAction act = r.ingress(name, kLocalFace, rec.id, now);
    adn_action(node, kLocalFace, act, name, nullptr, rec.id, true);
  }
}

void Simulator::Impl::complete(NodeId node, bool local, const ResponsePacket& resp) {
  auto& ep = local ? local_ep[static_cast<std::size_t>(node)]
                   : consumer_ep[static_cast<std::size_t>(node)];
  auto it = ep.pending.find(resp.name());
  if (it == ep.pending.end()) {
    bump("duplicate_responses");
    return;
  }
  for (TraceId id : it->second) {
    auto& rec = result.requests[id - 1];
    rec.done = now;
    if (resp.is_data()) {
      rec.outcome = Outcome::Data;
      bump("delivered_data");
    } else {
      rec.outcome = Outcome::Nack;
      rec.nack_code = resp.nack_code();
      bump("delivered_nack_" + to_string(*resp.nack_code()));
    }
    record(TraceKind::Deliver, node, local ? kLocalPeer : -1, resp.name().key(), id, -1, -1,
           resp.flow_state(),
           resp.is_data() ? "data" : "nack:" + to_string(*resp.nack_code()));
  }
  ep.pending.erase(it);
}

void Simulator::Impl::ndn_interest(NodeId node, IfaceId iface, const NdnInterest& interest) {
  auto& r = *ndn[static_cast<std::size_t>(node)];
  const NdnAction act = r.process_interest(interest, iface, now);
  const NodeId peer = peer_of(node, iface);
  const std::string& name = interest.name.key();
  switch (act.kind) {
    case NdnActionKind::RespondData: {
      bump(act.produced_locally ? "produced" : "cs_hits");
      record(TraceKind::Respond, node, peer, name, interest.trace_id, -1, -1, 0,
             act.produced_locally ? "producer" : "cs");
      send_response(node, iface,
                    ResponsePacket::data(interest.name, Address{}, 0, sizes.data_base,
                                         interest.trace_id));
      break;
    }
    case NdnActionKind::Aggregate:
      bump("aggregated");
      record(TraceKind::Aggregate, node, peer, name, interest.trace_id, -1, -1, 0,
             "nonce=" + std::to_string(interest.nonce));
      schedule_at(now + sc.pit_lifetime, EventKind::PitTimer, node);
      break;
    case NdnActionKind::Forward:
      for (IfaceId f : act.ifaces) {
        bump("forwarded");
        record(TraceKind::Forward, node, topo.neighbor(node, f), name, interest.trace_id, -1, -1,
               0, "nonce=" + std::to_string(interest.nonce));
        send(node, f, interest);
      }
      schedule_at(now + sc.pit_lifetime, EventKind::PitTimer, node);
      break;
    case NdnActionKind::NackDuplicate:
    case NdnActionKind::NackNoRoute: {
      const NackCode code = act.kind == NdnActionKind::NackDuplicate ? NackCode::DuplicateNonce
                                                                     : NackCode::NoRoute;
      bump("nack_sent_" + to_string(code));
      record(TraceKind::Nack, node, peer, name, interest.trace_id, -1, -1, 0, to_string(code));
      send_response(node, iface,
                    ResponsePacket::nack(interest.name, Address{}, 0, code, interest.trace_id));
      break;
    }
  }
}

void Simulator::Impl::ndn_response(NodeId node, IfaceId iface, const ResponsePacket& resp) {
  auto& r = *ndn[static_cast<std::size_t>(node)];
  NdnResponseResult res = r.process_response(resp, iface, now);
  if (!res.matched) {
    bump("drop_no_pit");
    record(TraceKind::Drop, node, peer_of(node, iface), resp.name().key(), resp.trace_id(), -1,
           -1, 0, "no-pit");
    return;
  }
  std::vector<IfaceId> sent;
  for (const auto& rec : res.downstream) {
    if (std::find(sent.begin(), sent.end(), rec.in_iface) != sent.end()) continue;
    sent.push_back(rec.in_iface);
    record(resp.is_data() ? TraceKind::DataFwd : TraceKind::NackFwd, node,
           peer_of(node, rec.in_iface), resp.name().key(), rec.trace_id);
    send_response(node, rec.in_iface, resp);
  }
}

void Simulator::Impl::adn_action(NodeId node, IfaceId iface, const AdnAction& act,
                                 const ContentName& name, const RouterInterest* received,
                                 TraceId trace, bool ingress) {
  auto& r = *adn[static_cast<std::size_t>(node)];
  const NodeId peer = peer_of(node, iface);
  const std::int64_t h_in = received ? static_cast<std::int64_t>(received->distance()) : -1;
  const std::uint64_t flow = received ? received->flow_state() : 0;
  const Address source = received ? received->source() : r.local_source();
  switch (act.kind) {
    case AdnActionKind::RespondData: {
      bump(act.produced_locally ? "produced" : "cs_hits");
      record(TraceKind::Respond, node, peer, name.key(), trace, h_in, -1, flow,
             act.produced_locally ? "anchor" : "cs");
      auto data = ResponsePacket::data(name, source, flow, sizes.data_base, trace);
      data.label = received ? received->distance() : 0;
      send_response(node, iface, data);
      break;
    }
    case AdnActionKind::Forward: {
      bump("forwarded");
      const RouterInterest& out = *act.interest;
      record(TraceKind::Forward, node, topo.neighbor(node, act.iface), name.key(), trace, h_in,
             out.distance(), out.flow_state(), "src=" + to_string(out.source()));
      send(node, act.iface, out);
      if (ingress) schedule_at(now + sc.pit_lifetime, EventKind::LocalTimer, node);
      break;
    }
    case AdnActionKind::Aggregate: {
      bump("aggregated");
      const auto best =
          received ? r.best_next_hop(received->anchor().value, iface).first : kInfinity;
      record(TraceKind::Aggregate, node, peer, name.key(), trace, h_in,
             best == kInfinity ? -1 : static_cast<std::int64_t>(best), flow,
             ingress ? "local" : "");
      if (ingress) schedule_at(now + sc.pit_lifetime, EventKind::LocalTimer, node);
      break;
    }
    case AdnActionKind::Nack: {
      bump("nack_sent_" + to_string(act.nack_code));
      std::int64_t best = -1;
      if (received) {
        const Distance d = r.best_next_hop(received->anchor().value, iface).first;
        if (d != kInfinity) best = d;
      }
      record(TraceKind::Nack, node, peer, name.key(), trace, h_in, best, flow,
             to_string(act.nack_code));
      auto nack = ResponsePacket::nack(name, source, flow, act.nack_code, trace);
      nack.label = received ? received->distance() : 0;
      send_response(node, iface, nack);
      break;
    }
  }
}

void Simulator::Impl::adn_response(NodeId node, IfaceId iface, const ResponsePacket& resp) {
  auto& r = *adn[static_cast<std::size_t>(node)];
  const AdnResponseResult res = r.process_response(resp, iface, now);
  const TraceKind kind = resp.is_data() ? TraceKind::DataFwd : TraceKind::NackFwd;
  for (const auto& [f, label] : res.forward) {
    ResponsePacket copy = resp;
    copy.label = label;
    record(kind, node, topo.neighbor(node, f), resp.name().key(), resp.trace_id(),
           resp.label, label, resp.flow_state());
    send(node, f, copy);
  }
  for (IfaceId f : res.consumers) {
    record(kind, node, peer_of(node, f), resp.name().key(), resp.trace_id(), resp.label, -1,
           resp.flow_state());
    send_response(node, f, resp);
  }
  if (res.dropped) {
    bump("drop_no_sat");
    record(TraceKind::Drop, node, peer_of(node, iface), resp.name().key(), resp.trace_id(),
           resp.label, -1, resp.flow_state(), "no-origin");
  }
}

void Simulator::Impl::producer_interest(NodeId node, IfaceId iface, const NdnInterest& interest) {
  const auto& prefixes = produced[static_cast<std::size_t>(node)];
  const bool serves = std::any_of(prefixes.begin(), prefixes.end(), [&](const NamePrefix& p) {
    return name_matches_prefix(interest.name, p);
  });
  const NodeId peer = topo.neighbor(node, iface);
  if (serves) {
    bump("produced");
    record(TraceKind::Respond, node, peer, interest.name.key(), interest.trace_id, -1, -1, 0,
           "producer");
    send(node, iface,
         ResponsePacket::data(interest.name, Address{}, 0, sizes.data_base, interest.trace_id));
  } else {
    bump("nack_sent_NoData");
    record(TraceKind::Nack, node, peer, interest.name.key(), interest.trace_id, -1, -1, 0,
           "NoData");
    send(node, iface,
         ResponsePacket::nack(interest.name, Address{}, 0, NackCode::NoData, interest.trace_id));
  }
}

void Simulator::Impl::on_packet(const Event& e) {
  const NodeId node = e.node;
  const Packet& packet = *e.packet;
  switch (topo.node(node).kind) {
    case NodeKind::Consumer:
      if (const auto* resp = std::get_if<ResponsePacket>(&packet)) complete(node, false, *resp);
      return;
    case NodeKind::Producer:
      if (const auto* interest = std::get_if<NdnInterest>(&packet)) {
        producer_interest(node, e.iface, *interest);
      }
      return;
    case NodeKind::Router:
      break;
  }
  if (sc.plane == Plane::Ndn) {
    if (const auto* interest = std::get_if<NdnInterest>(&packet)) {
      ndn_interest(node, e.iface, *interest);
    } else if (const auto* resp = std::get_if<ResponsePacket>(&packet)) {
      ndn_response(node, e.iface, *resp);
    }
    return;
  }
  auto& r = *adn[static_cast<std::size_t>(node)];
  if (const auto* interest = std::get_if<NdnInterest>(&packet)) {
    if (!r.is_consumer_facing(e.iface)) {
      bump("drop_unexpected");
      return;
    }
    const AdnAction act = r.ingress(interest->name, e.iface, interest->trace_id, now);
    adn_action(node, e.iface, act, interest->name, nullptr, interest->trace_id, true);
  } else if (const auto* ri = std::get_if<RouterInterest>(&packet)) {
    const AdnAction act = r.process_interest(*ri, e.iface, now);
    adn_action(node, e.iface, act, ri->name(), ri, ri->trace_id(), false);
  } else if (const auto* resp = std::get_if<ResponsePacket>(&packet)) {
    adn_response(node, e.iface, *resp);
  }
}

void Simulator::Impl::apply_link_event(const EventSpec& ev) {
  using A = LinkEvent::Action;
  switch (ev.action) {
    case A::Down:
    case A::Up: {
      const NodeId a = topo.require(ev.a);
      const NodeId b = topo.require(ev.b);
      const auto link = topo.find_link(a, b);
      if (!link) throw ConfigError("no link " + ev.a + "-" + ev.b);
      const bool up = ev.action == A::Up;
      topo.set_link_up(*link, up);
      result.link_history.push_back({now, *link, up});
      for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (!topo.is_router(x)) continue;
        const IfaceId f = *topo.iface_to(x, y);
        if (sc.plane == Plane::Ndn) {
          ndn[static_cast<std::size_t>(x)]->link_state_changed(f, up);
        } else {
          adn[static_cast<std::size_t>(x)]->set_iface_up(f, up);
        }
      }
      record(TraceKind::Link, a, b, "", 0, -1, -1, 0, to_string(ev.action));
      break;
    }
    case A::SetColor: {
      const NodeId a = topo.require(ev.a);
      const NodeId b = topo.require(ev.b);
      if (sc.plane == Plane::Ndn && topo.is_router(a)) {
        ndn[static_cast<std::size_t>(a)]->set_color(ev.prefix, *topo.iface_to(a, b), ev.color);
      }
      record(TraceKind::Link, a, b, ev.prefix.key(), 0, -1, -1, 0,
             "color=" + to_string(ev.color));
      break;
    }
    case A::SetDistance: {
      const NodeId a = topo.require(ev.a);
      const NodeId b = topo.require(ev.b);
      const NodeId anchor = topo.require(ev.anchor);
      if (sc.plane == Plane::Adn && topo.is_router(a)) {
        adn[static_cast<std::size_t>(a)]->set_distance(
            AddressPrefix{anchor_address(anchor).value, 64}, *topo.iface_to(a, b), ev.distance);
      }
      record(TraceKind::Link, a, b, "", 0, static_cast<std::int64_t>(ev.distance), -1, 0,
             "distance anchor=" + ev.anchor);
      break;
    }
    case A::RecomputeRoutes:
      install_fibs();
      record(TraceKind::Link, -1, -1, "", 0, -1, -1, 0, "recompute");
      break;
  }
}

void Simulator::Impl::sample() {
  TableSample s;
  s.time = now;
  std::uint64_t table_sum = 0;
  std::uint64_t pending_sum = 0;
  for (NodeId r : result.routers) {
    std::uint32_t table = 0;
    std::uint32_t pending = 0;
    if (sc.plane == Plane::Ndn) {
      const auto& router = *ndn[static_cast<std::size_t>(r)];
      table = static_cast<std::uint32_t>(router.pit_size());
      pending = static_cast<std::uint32_t>(router.pending_local());
    } else {
      auto& router = *adn[static_cast<std::size_t>(r)];
      for (const auto& gone : router.sat_gc(now)) {
        record(TraceKind::SatExpire, r, -1, "", 0, -1, -1, gone.flow_state, to_string(gone.source));
      }
      table = static_cast<std::uint32_t>(router.sat_size());
      pending = static_cast<std::uint32_t>(router.pending_local());
    }
    s.table.push_back(table);
    s.pending_local.push_back(pending);
    table_sum += table;
    pending_sum += pending;
  }
  record(TraceKind::Sample, -1, -1, "", 0, static_cast<std::int64_t>(table_sum),
         static_cast<std::int64_t>(pending_sum));
  result.samples.push_back(std::move(s));
}

void Simulator::Impl::process(const Event& e) {
  switch (e.kind) {
    case EventKind::Packet:
      on_packet(e);
      break;
    case EventKind::Request: {
      const auto& req = scripted[e.index];
      issue_request(req.node, req.local, req.name);
      break;
    }
    case EventKind::StreamRequest: {
      const auto& req = scripted[static_cast<std::size_t>(e.iface)];
      issue_request(req.node, req.local, req.name);
      auto next = streams[e.index].next();
      if (next.time <= sc.horizon) {
        scripted.push_back({stream_node[e.index], true, next.name});
        Event ne;
        ne.time = next.time;
        ne.kind = EventKind::StreamRequest;
        ne.node = stream_node[e.index];
        ne.index = e.index;
        ne.iface = static_cast<IfaceId>(scripted.size() - 1);
        schedule(std::move(ne));
      }
      break;
    }
    case EventKind::PitTimer:
      for (const auto& x : ndn[static_cast<std::size_t>(e.node)]->pit_expire(now)) {
        bump("pit_expired");
        record(TraceKind::PitExpire, e.node, peer_of(e.node, x.in_iface), x.name.key(),
               x.trace_id, -1, -1, 0, "nonce=" + std::to_string(x.nonce));
      }
      break;
    case EventKind::LocalTimer:
      adn[static_cast<std::size_t>(e.node)]->expire_local(now);
      break;
    case EventKind::ConsumerTimeout: {
      auto& rec = result.requests[e.index - 1];
      if (rec.outcome != Outcome::Pending) break;
      rec.outcome = Outcome::Expired;
      rec.done = now;
      bump("expired");
      auto& ep = rec.local_app ? local_ep[static_cast<std::size_t>(rec.endpoint)]
                               : consumer_ep[static_cast<std::size_t>(rec.endpoint)];
      if (auto it = ep.pending.find(rec.name); it != ep.pending.end()) {
        auto& v = it->second;
        v.erase(std::remove(v.begin(), v.end(), rec.id), v.end());
        if (v.empty()) ep.pending.erase(it);
      }
      record(TraceKind::Expire, rec.endpoint, rec.local_app ? kLocalPeer : -1, rec.name.key(),
             rec.id);
      break;
    }
    case EventKind::Link:
      apply_link_event(events[e.index]);
      break;
    case EventKind::Sample: {
      sample();
      const std::size_t k = e.index + 1;
      const SimTime t = static_cast<double>(k) * sc.sample_interval;
      if (t <= sc.horizon + 1e-9) schedule_at(t, EventKind::Sample, -1, k);
      break;
    }
  }
}

RunResult Simulator::Impl::run() {
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), Later{});
    Event e = std::move(heap.back());
    heap.pop_back();
    now = e.time;
    ++result.events;
    if (opt.max_events != 0 && result.events > opt.max_events) {
      bump("truncated");
      break;
    }
    process(e);
  }
  return std::move(result);
}

Simulator::Simulator(const Scenario& scenario, RunOptions options)
    : impl_(std::make_unique<Impl>(scenario, options)) {}

Simulator::~Simulator() = default;

RunResult Simulator::run() { return impl_->run(); }

NdnRouter* Simulator::ndn_router(NodeId id) {
  return impl_->ndn.at(static_cast<std::size_t>(id)).get();
}

AdnRouter* Simulator::adn_router(NodeId id) {
  return impl_->adn.at(static_cast<std::size_t>(id)).get();
}

const Topology& Simulator::topology() const noexcept { return impl_->topo; }

RunResult run(const Scenario& scenario, RunOptions options) {
  Simulator sim(scenario, options);
  return sim.run();
}

}  // namespace icnsim

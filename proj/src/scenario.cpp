#include "icnsim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "icnsim/workload.hpp"

namespace icnsim {

std::string to_string(Plane p) { return p == Plane::Ndn ? "ndn" : "adn"; }

namespace {

std::string join_issues(const std::vector<ParseIssue>& issues) {
  std::string msg;
  for (const auto& i : issues) {
    if (!msg.empty()) msg += '\n';
    if (i.line > 0) msg += "line " + std::to_string(i.line) + ": ";
    msg += i.message;
  }
  return msg;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<ParseIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Sweep lists: "a b", "a,b" and "a, b" all mean the same.
std::vector<std::string> items(std::string s) {
  std::replace(s.begin(), s.end(), ',', ' ');
  return words(s);
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct BadValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_double(std::string_view s) {
  double v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end || !std::isfinite(v)) {
    throw BadValue("expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) {
    throw BadValue("expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool to_bool(std::string_view s) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw BadValue("expected true/false, got '" + std::string(s) + "'");
}

Plane to_plane(std::string_view s) {
  if (s == "ndn") return Plane::Ndn;
  if (s == "adn") return Plane::Adn;
  throw BadValue("unknown plane '" + std::string(s) + "' (ndn|adn)");
}

CachingMode to_caching(std::string_view s) {
  if (auto m = parse_caching(s)) return *m;
  throw BadValue("unknown caching mode '" + std::string(s) + "' (edge|on_path|none)");
}

NodeKind to_kind(std::string_view s) {
  if (s == "router") return NodeKind::Router;
  if (s == "consumer") return NodeKind::Consumer;
  if (s == "producer") return NodeKind::Producer;
  throw BadValue("unknown node kind '" + std::string(s) + "'");
}

Distance to_distance(std::string_view s) {
  if (s == "inf") return kInfinity;
  const auto v = to_u64(s);
  if (v >= kInfinity) throw BadValue("distance too large");
  return static_cast<Distance>(v);
}

NamePrefix to_prefix(std::string_view s) {
  try {
    return NamePrefix::parse(s);
  } catch (const NameError& e) {
    throw BadValue(e.what());
  }
}

ContentName to_name(std::string_view s) {
  try {
    return ContentName::parse(s);
  } catch (const NameError& e) {
    throw BadValue(e.what());
  }
}

void expect_args(const std::vector<std::string>& w, std::size_t min, std::size_t max,
                 const char* usage) {
  if (w.size() < min || w.size() > max) throw BadValue(std::string("usage: ") + usage);
}

/// Splits trailing "key=value" options off an argument list.
std::map<std::string, std::string> take_options(std::vector<std::string>& w, std::size_t keep) {
  std::map<std::string, std::string> opts;
  while (w.size() > keep) {
    const auto eq = w.back().find('=');
    if (eq == std::string::npos) break;
    opts[w.back().substr(0, eq)] = w.back().substr(eq + 1);
    w.pop_back();
  }
  return opts;
}

struct NodeRef {
  int line;
  std::string name;
};

struct LinkRef {
  int line;
  std::string a;
  std::string b;
};

class Parser {
 public:
  Scenario parse(std::string_view text);

 private:
  using Handler = std::function<void(const std::string& value)>;

  void add_issue(int line, std::string msg) { issues_.push_back({line, std::move(msg)}); }
  void ref(const std::string& name) { node_refs_.push_back({line_, name}); }
  void validate();

  std::map<std::string, std::map<std::string, Handler>> sections();

  Scenario s_;
  std::vector<ParseIssue> issues_;
  std::vector<NodeRef> node_refs_;
  std::vector<LinkRef> link_refs_;
  std::vector<NodeRef> router_refs_;
  std::vector<int> node_lines_;
  std::vector<int> link_lines_;
  std::map<std::string, int> key_lines_;
  std::string mode_ = "explicit";
  int line_ = 0;
};

std::map<std::string, std::map<std::string, Parser::Handler>> Parser::sections() {
  std::map<std::string, std::map<std::string, Handler>> t;
  auto& sc = t["scenario"];
  sc["name"] = [this](const std::string& v) { s_.name = v; };
  sc["plane"] = [this](const std::string& v) { s_.plane = to_plane(v); };
  sc["caching"] = [this](const std::string& v) { s_.caching = to_caching(v); };
  sc["seed"] = [this](const std::string& v) { s_.seed = to_u64(v); };
  sc["horizon"] = [this](const std::string& v) { s_.horizon = to_double(v); };
  sc["warmup"] = [this](const std::string& v) { s_.warmup = to_double(v); };
  sc["sample_interval"] = [this](const std::string& v) { s_.sample_interval = to_double(v); };
  sc["pit_lifetime"] = [this](const std::string& v) { s_.pit_lifetime = to_double(v); };
  sc["sat_timeout"] = [this](const std::string& v) { s_.sat_timeout = to_double(v); };
  sc["cs_capacity"] = [this](const std::string& v) { s_.cs_capacity = to_u64(v); };
  sc["ndn_multipath"] = [this](const std::string& v) { s_.ndn_multipath = to_bool(v); };
  sc["multicast_marker"] = [this](const std::string& v) {
    if (v.empty() || v.find('/') != std::string::npos) throw BadValue("bad marker");
    s_.multicast_marker = v;
  };
  sc["local_producers"] = [this](const std::string& v) { s_.local_producers = to_bool(v); };
  sc["scale"] = [this](const std::string& v) { s_.scale = to_double(v); };
  sc["resource_heavy"] = [this](const std::string& v) { s_.resource_heavy = to_bool(v); };

  auto& topo = t["topology"];
  topo["mode"] = [this](const std::string& v) {
    if (v != "generated" && v != "explicit") throw BadValue("mode must be generated|explicit");
    mode_ = v;
    s_.topology.generated = v == "generated";
  };
  topo["n"] = [this](const std::string& v) {
    const auto n = to_u64(v);
    if (n < 1 || n > 100000) throw BadValue("n must be in [1, 100000]");
    s_.topology.n = static_cast<int>(n);
  };
  topo["side"] = [this](const std::string& v) { s_.topology.side = to_double(v); };
  topo["radius"] = [this](const std::string& v) { s_.topology.radius = to_double(v); };
  topo["seed"] = [this](const std::string& v) { s_.topology.seed = to_u64(v); };
  topo["delay"] = [this](const std::string& v) { s_.topology.delay = to_double(v); };
  topo["rate"] = [this](const std::string& v) { s_.topology.rate_bps = to_double(v); };
  topo["node"] = [this](const std::string& v) {
    auto w = words(v);
    expect_args(w, 1, 2, "node = <name> [router|consumer|producer]");
    NodeSpec n{w[0], w.size() > 1 ? to_kind(w[1]) : NodeKind::Router};
    s_.topology.nodes.push_back(std::move(n));
    node_lines_.push_back(line_);
  };
  topo["link"] = [this](const std::string& v) {
    auto w = words(v);
    auto opts = take_options(w, 2);
    expect_args(w, 2, 2, "link = <a> <b> [delay=S] [rate=BPS]");
    LinkSpec l{w[0], w[1], std::nullopt, std::nullopt};
    for (const auto& [k, val] : opts) {
      if (k == "delay") {
        l.delay = to_double(val);
      } else if (k == "rate") {
        l.rate_bps = to_double(val);
      } else {
        throw BadValue("unknown link option '" + k + "'");
      }
    }
    if ((l.delay && *l.delay < 0) || (l.rate_bps && *l.rate_bps <= 0)) {
      throw BadValue("link delay must be >= 0 and rate > 0");
    }
    ref(l.a);
    ref(l.b);
    s_.topology.links.push_back(std::move(l));
    link_lines_.push_back(line_);
  };

  auto& ann = t["announce"];
  auto announce = [this](Announcement::Kind kind, const std::string& v) {
    auto w = words(v);
    if (w.size() < 2) throw BadValue("usage: <node> <prefix> [<prefix>...]");
    AnnouncementSpec a{kind, w[0], {}};
    for (std::size_t i = 1; i < w.size(); ++i) a.prefixes.push_back(to_prefix(w[i]));
    ref(a.node);
    s_.announcements.push_back(std::move(a));
  };
  ann["prefix"] = [announce](const std::string& v) {
    announce(Announcement::Kind::NdnPrefix, v);
  };
  ann["anchor"] = [announce](const std::string& v) {
    announce(Announcement::Kind::AdnAnchor, v);
  };

  auto& ev = t["events"];
  using A = LinkEvent::Action;
  auto link_event = [this](A action, const std::string& v) {
    auto w = words(v);
    expect_args(w, 3, 3, "<time> <a> <b>");
    EventSpec e;
    e.time = to_double(w[0]);
    e.action = action;
    e.a = w[1];
    e.b = w[2];
    link_refs_.push_back({line_, e.a, e.b});
    s_.events.push_back(std::move(e));
  };
  ev["down"] = [link_event](const std::string& v) { link_event(A::Down, v); };
  ev["up"] = [link_event](const std::string& v) { link_event(A::Up, v); };
  ev["color"] = [this](const std::string& v) {
    auto w = words(v);
    expect_args(w, 5, 5, "color = <time> <router> <neighbor> <prefix> <green|yellow|red>");
    EventSpec e;
    e.time = to_double(w[0]);
    e.action = A::SetColor;
    e.a = w[1];
    e.b = w[2];
    e.prefix = to_prefix(w[3]);
    const auto c = parse_color(w[4]);
    if (!c) throw BadValue("unknown color '" + w[4] + "'");
    e.color = *c;
    router_refs_.push_back({line_, e.a});
    link_refs_.push_back({line_, e.a, e.b});
    s_.events.push_back(std::move(e));
  };
  ev["distance"] = [this](const std::string& v) {
    auto w = words(v);
    expect_args(w, 5, 5, "distance = <time> <router> <neighbor> <anchor> <hops|inf>");
    EventSpec e;
    e.time = to_double(w[0]);
    e.action = A::SetDistance;
    e.a = w[1];
    e.b = w[2];
    e.anchor = w[3];
    e.distance = to_distance(w[4]);
    router_refs_.push_back({line_, e.a});
    link_refs_.push_back({line_, e.a, e.b});
    ref(e.anchor);
    s_.events.push_back(std::move(e));
  };
  ev["recompute"] = [this](const std::string& v) {
    auto w = words(v);
    expect_args(w, 1, 1, "recompute = <time>");
    EventSpec e;
    e.time = to_double(w[0]);
    e.action = A::RecomputeRoutes;
    s_.events.push_back(std::move(e));
  };

  auto& wl = t["workload"];
  wl["catalog"] = [this](const std::string& v) { s_.workload.catalog = to_u64(v); };
  wl["zipf"] = [this](const std::string& v) { s_.workload.zipf = to_double(v); };
  wl["rate"] = [this](const std::string& v) { s_.workload.rate = to_double(v); };
  wl["seed"] = [this](const std::string& v) { s_.workload.seed = to_u64(v); };
  wl["request"] = [this](const std::string& v) {
    auto w = words(v);
    expect_args(w, 3, 3, "request = <time> <node> <name>");
    RequestSpec r{to_double(w[0]), w[1], to_name(w[2])};
    ref(r.node);
    s_.workload.requests.push_back(std::move(r));
  };
  wl["group"] = [this](const std::string& v) {
    auto w = words(v);
    auto opts = take_options(w, 1);
    expect_args(w, 1, 1, "group = <prefix> members=a,b source=n [flow=N] [start=S] [interval=S]");
    GroupSpec g;
    g.group = to_prefix(w[0]);
    for (const auto& [k, val] : opts) {
      if (k == "members") {
        g.members = split_commas(val);
      } else if (k == "source") {
        g.source = val;
      } else if (k == "flow") {
        g.flow_length = to_u64(val);
      } else if (k == "start") {
        g.start = to_double(val);
      } else if (k == "interval") {
        g.interval = to_double(val);
      } else {
        throw BadValue("unknown group option '" + k + "'");
      }
    }
    if (g.members.empty() || g.source.empty()) throw BadValue("group needs members= and source=");
    if (g.flow_length < 1) throw BadValue("flow must be >= 1");
    for (const auto& m : g.members) ref(m);
    router_refs_.push_back({line_, g.source});
    s_.workload.groups.push_back(std::move(g));
  };

  auto& sw = t["sweep"];
  sw["planes"] = [this](const std::string& v) {
    s_.sweep.planes.clear();
    for (const auto& w : items(v)) s_.sweep.planes.push_back(to_plane(w));
  };
  sw["caching"] = [this](const std::string& v) {
    s_.sweep.caching.clear();
    for (const auto& w : items(v)) s_.sweep.caching.push_back(to_caching(w));
  };
  sw["rates"] = [this](const std::string& v) {
    s_.sweep.rates.clear();
    for (const auto& w : items(v)) {
      const double r = to_double(w);
      if (r < 0) throw BadValue("rates must be >= 0");
      s_.sweep.rates.push_back(r);
    }
  };

  auto& out = t["output"];
  out["trace"] = [this](const std::string& v) { s_.trace_path = v; };
  out["metrics"] = [this](const std::string& v) { s_.metrics_path = v; };
  return t;
}

Scenario Parser::parse(std::string_view text) {
  auto table = sections();
  static const std::set<std::string> kRepeatable = {"node",  "link", "prefix",   "anchor",
                                                    "down",  "up",   "color",    "distance",
                                                    "recompute", "request", "group"};
  std::string section;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        add_issue(line_, "malformed section header");
        continue;
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!table.contains(section)) add_issue(line_, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      add_issue(line_, "expected 'key = value'");
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (section.empty()) {
      add_issue(line_, "key '" + key + "' outside of any section");
      continue;
    }
    auto sit = table.find(section);
    if (sit == table.end()) continue;  // already reported
    auto hit = sit->second.find(key);
    if (hit == sit->second.end()) {
      add_issue(line_, "unknown key '" + key + "' in [" + section + "]");
      continue;
    }
    const std::string qualified = section + "." + key;
    if (!kRepeatable.contains(key)) {
      if (auto [it, fresh] = key_lines_.emplace(qualified, line_); !fresh) {
        add_issue(line_, "duplicate key '" + key + "' (first on line " +
                             std::to_string(it->second) + ")");
        continue;
      }
    }
    try {
      hit->second(value);
    } catch (const BadValue& e) {
      add_issue(line_, key + ": " + e.what());
    }
  }
  validate();
  if (!issues_.empty()) {
    std::stable_sort(issues_.begin(), issues_.end(),
                     [](const ParseIssue& a, const ParseIssue& b) { return a.line < b.line; });
    throw ScenarioError(std::move(issues_));
  }
  return std::move(s_);
}

void Parser::validate() {
  auto at = [this](const char* key) {
    auto it = key_lines_.find(key);
    return it == key_lines_.end() ? 0 : it->second;
  };
  auto check = [&](bool ok, const char* key, const std::string& msg) {
    if (!ok) add_issue(at(key), msg);
  };
  check(s_.horizon > 0, "scenario.horizon", "horizon must be > 0");
  check(s_.warmup >= 0 && s_.warmup < s_.horizon, "scenario.warmup",
        "warmup must be in [0, horizon)");
  check(s_.sample_interval > 0, "scenario.sample_interval", "sample_interval must be > 0");
  check(s_.pit_lifetime > 0, "scenario.pit_lifetime", "pit_lifetime must be > 0");
  check(s_.sat_timeout > 0, "scenario.sat_timeout", "sat_timeout must be > 0");
  check(s_.scale > 0, "scenario.scale", "scale must be > 0");
  check(s_.workload.rate >= 0, "workload.rate", "rate must be >= 0");
  check(s_.workload.zipf >= 0, "workload.zipf", "zipf must be >= 0");
  check(s_.workload.catalog >= 1, "workload.catalog", "catalog must be >= 1");
  check(s_.topology.delay >= 0, "topology.delay", "delay must be >= 0");
  check(s_.topology.rate_bps > 0, "topology.rate", "rate must be > 0");

  std::map<std::string, NodeKind> kinds;
  std::set<std::pair<std::string, std::string>> links;
  std::map<std::string, int> degree;
  if (s_.topology.generated) {
    check(s_.topology.side > 0, "topology.side", "side must be > 0");
    check(s_.topology.radius > 0, "topology.radius", "radius must be > 0");
    if (!s_.topology.nodes.empty() || !s_.topology.links.empty()) {
      add_issue(at("topology.mode"), "generated topologies take no node/link lines");
    }
    for (int i = 0; i < s_.topology.n; ++i) kinds["r" + std::to_string(i)] = NodeKind::Router;
  } else {
    if (s_.topology.nodes.empty()) add_issue(0, "explicit topology declares no nodes");
    for (std::size_t i = 0; i < s_.topology.nodes.size(); ++i) {
      const auto& n = s_.topology.nodes[i];
      if (!kinds.emplace(n.name, n.kind).second) {
        add_issue(node_lines_[i], "duplicate node '" + n.name + "'");
      }
    }
    for (std::size_t i = 0; i < s_.topology.links.size(); ++i) {
      const auto& l = s_.topology.links[i];
      auto key = std::minmax(l.a, l.b);
      if (l.a == l.b) add_issue(link_lines_[i], "self link at '" + l.a + "'");
      if (!links.insert(key).second) {
        add_issue(link_lines_[i], "duplicate link " + l.a + "-" + l.b);
      }
      ++degree[l.a];
      ++degree[l.b];
    }
  }

  for (const auto& r : node_refs_) {
    if (!kinds.contains(r.name)) add_issue(r.line, "unknown node '" + r.name + "'");
  }
  for (const auto& r : router_refs_) {
    auto it = kinds.find(r.name);
    if (it == kinds.end()) {
      add_issue(r.line, "unknown node '" + r.name + "'");
    } else if (it->second != NodeKind::Router) {
      add_issue(r.line, "'" + r.name + "' is not a router");
    }
  }
  for (const auto& r : link_refs_) {
    for (const auto* n : {&r.a, &r.b}) {
      if (!kinds.contains(*n)) add_issue(r.line, "unknown node '" + *n + "'");
    }
    if (!s_.topology.generated && kinds.contains(r.a) && kinds.contains(r.b) &&
        !links.contains(std::minmax(r.a, r.b))) {
      add_issue(r.line, "unknown link " + r.a + "-" + r.b);
    }
  }
  if (!s_.topology.generated) {
    for (std::size_t i = 0; i < s_.topology.nodes.size(); ++i) {
      const auto& n = s_.topology.nodes[i];
      if (n.kind != NodeKind::Router && degree[n.name] != 1) {
        add_issue(node_lines_[i], "non-router node '" + n.name + "' must have exactly one link");
      }
    }
  }
  const NamingConvention conv{s_.multicast_marker};
  for (const auto& g : s_.workload.groups) {
    if (g.group.size() != 2 || g.group.component(0) != conv.multicast_marker) {
      add_issue(at("workload.group"),
                "group prefix " + g.group.to_uri() + " must be /" + conv.multicast_marker + "/<g>");
    }
  }
}

std::string fmt(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string kind_name(NodeKind k) { return to_string(k); }

}  // namespace

Scenario parse_scenario(std::string_view text) { return Parser{}.parse(text); }

std::string emit_scenario(const Scenario& s) {
  std::ostringstream o;
  o << "[scenario]\n"
    << "name = " << s.name << '\n'
    << "plane = " << to_string(s.plane) << '\n'
    << "caching = " << to_string(s.caching) << '\n'
    << "seed = " << s.seed << '\n'
    << "horizon = " << fmt(s.horizon) << '\n'
    << "warmup = " << fmt(s.warmup) << '\n'
    << "sample_interval = " << fmt(s.sample_interval) << '\n'
    << "pit_lifetime = " << fmt(s.pit_lifetime) << '\n'
    << "sat_timeout = " << fmt(s.sat_timeout) << '\n'
    << "cs_capacity = " << s.cs_capacity << '\n'
    << "ndn_multipath = " << (s.ndn_multipath ? "true" : "false") << '\n'
    << "multicast_marker = " << s.multicast_marker << '\n'
    << "local_producers = " << (s.local_producers ? "true" : "false") << '\n'
    << "scale = " << fmt(s.scale) << '\n'
    << "resource_heavy = " << (s.resource_heavy ? "true" : "false") << '\n';

  const auto& t = s.topology;
  o << "\n[topology]\n"
    << "mode = " << (t.generated ? "generated" : "explicit") << '\n'
    << "n = " << t.n << '\n'
    << "side = " << fmt(t.side) << '\n'
    << "radius = " << fmt(t.radius) << '\n'
    << "seed = " << t.seed << '\n'
    << "delay = " << fmt(t.delay) << '\n'
    << "rate = " << fmt(t.rate_bps) << '\n';
  for (const auto& n : t.nodes) o << "node = " << n.name << ' ' << kind_name(n.kind) << '\n';
  for (const auto& l : t.links) {
    o << "link = " << l.a << ' ' << l.b;
    if (l.delay) o << " delay=" << fmt(*l.delay);
    if (l.rate_bps) o << " rate=" << fmt(*l.rate_bps);
    o << '\n';
  }

  o << "\n[announce]\n";
  for (const auto& a : s.announcements) {
    o << (a.kind == Announcement::Kind::NdnPrefix ? "prefix = " : "anchor = ") << a.node;
    for (const auto& p : a.prefixes) o << ' ' << p.to_uri();
    o << '\n';
  }

  o << "\n[events]\n";
  using A = LinkEvent::Action;
  for (const auto& e : s.events) {
    switch (e.action) {
      case A::Down:
      case A::Up:
        o << (e.action == A::Down ? "down = " : "up = ") << fmt(e.time) << ' ' << e.a << ' '
          << e.b << '\n';
        break;
      case A::SetColor:
        o << "color = " << fmt(e.time) << ' ' << e.a << ' ' << e.b << ' ' << e.prefix.to_uri()
          << ' ' << to_string(e.color) << '\n';
        break;
      case A::SetDistance:
        o << "distance = " << fmt(e.time) << ' ' << e.a << ' ' << e.b << ' ' << e.anchor << ' '
          << (e.distance == kInfinity ? std::string("inf") : std::to_string(e.distance)) << '\n';
        break;
      case A::RecomputeRoutes:
        o << "recompute = " << fmt(e.time) << '\n';
        break;
    }
  }

  const auto& w = s.workload;
  o << "\n[workload]\n"
    << "catalog = " << w.catalog << '\n'
    << "zipf = " << fmt(w.zipf) << '\n'
    << "rate = " << fmt(w.rate) << '\n';
  if (w.seed) o << "seed = " << *w.seed << '\n';
  for (const auto& r : w.requests) {
    o << "request = " << fmt(r.time) << ' ' << r.node << ' ' << r.name.to_uri() << '\n';
  }
  for (const auto& g : w.groups) {
    o << "group = " << g.group.to_uri() << " members=";
    for (std::size_t i = 0; i < g.members.size(); ++i) o << (i ? "," : "") << g.members[i];
    o << " source=" << g.source << " flow=" << g.flow_length << " start=" << fmt(g.start)
      << " interval=" << fmt(g.interval) << '\n';
  }

  if (!s.sweep.empty()) {
    o << "\n[sweep]\n";
    if (!s.sweep.planes.empty()) {
      o << "planes =";
      for (auto p : s.sweep.planes) o << ' ' << to_string(p);
      o << '\n';
    }
    if (!s.sweep.caching.empty()) {
      o << "caching =";
      for (auto c : s.sweep.caching) o << ' ' << to_string(c);
      o << '\n';
    }
    if (!s.sweep.rates.empty()) {
      o << "rates =";
      for (auto r : s.sweep.rates) o << ' ' << fmt(r);
      o << '\n';
    }
  }
  if (s.trace_path || s.metrics_path) {
    o << "\n[output]\n";
    if (s.trace_path) o << "trace = " << *s.trace_path << '\n';
    if (s.metrics_path) o << "metrics = " << *s.metrics_path << '\n';
  }
  return o.str();
}

Scenario scaled(const Scenario& s, double factor) {
  if (!(factor > 0)) throw std::invalid_argument("scale factor must be > 0");
  Scenario out = s;
  out.scale = s.scale * factor;
  if (factor == 1.0) return out;
  if (out.topology.generated) {
    out.topology.n = std::max(2, static_cast<int>(std::lround(s.topology.n * factor)));
    out.topology.side = s.topology.side * std::sqrt(factor);
  }
  out.workload.catalog =
      std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(
                                     static_cast<double>(s.workload.catalog) * factor)));
  out.workload.rate = s.workload.rate * factor;
  for (auto& r : out.sweep.rates) r *= factor;
  return out;
}

std::vector<Scenario> expand_sweep(const Scenario& s) {
  if (s.sweep.empty()) return {s};
  const auto planes = s.sweep.planes.empty() ? std::vector<Plane>{s.plane} : s.sweep.planes;
  const auto caching =
      s.sweep.caching.empty() ? std::vector<CachingMode>{s.caching} : s.sweep.caching;
  const auto rates = s.sweep.rates.empty() ? std::vector<double>{s.workload.rate} : s.sweep.rates;
  std::vector<Scenario> out;
  for (auto p : planes) {
    for (auto c : caching) {
      for (double r : rates) {
        Scenario x = s;
        x.sweep = {};
        x.plane = p;
        x.caching = c;
        x.workload.rate = r;
        x.name = s.name + "/" + to_string(p) + "-" + to_string(c) + "-r" + fmt(r);
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

BuiltNetwork build_network(const Scenario& s) {
  BuiltNetwork net;
  const auto& t = s.topology;
  if (t.generated) {
    auto gen = generate_topology(t.n, t.side, t.radius, t.seed, t.delay, t.rate_bps);
    net.topology = std::move(gen.topology);
    net.topology_seed = gen.seed_used;
  } else {
    for (const auto& n : t.nodes) net.topology.add_node(n.name, n.kind);
    for (const auto& l : t.links) {
      net.topology.add_link(net.topology.require(l.a), net.topology.require(l.b),
                            l.delay.value_or(t.delay), l.rate_bps.value_or(t.rate_bps));
    }
    net.topology_seed = 0;
  }
  const auto& topo = net.topology;

  std::set<std::pair<NodeId, std::string>> announced;
  auto add = [&](Announcement::Kind kind, NodeId at, const std::vector<NamePrefix>& prefixes) {
    std::vector<NamePrefix> fresh;
    for (const auto& p : prefixes) {
      if (announced.insert({at, p.key()}).second) fresh.push_back(p);
    }
    if (fresh.empty()) return;
    if (kind == Announcement::Kind::NdnPrefix) {
      for (auto& p : fresh) net.announcements.push_back(Announcement::ndn(at, std::move(p)));
    } else {
      net.announcements.push_back(Announcement::anchor(at, std::move(fresh)));
    }
  };

  for (const auto& a : s.announcements) add(a.kind, topo.require(a.node), a.prefixes);
  const auto plane_kind =
      s.plane == Plane::Ndn ? Announcement::Kind::NdnPrefix : Announcement::Kind::AdnAnchor;
  for (const auto& g : s.workload.groups) add(plane_kind, topo.require(g.source), {g.group});
  if (t.generated && s.local_producers) {
    for (NodeId r : topo.routers()) add(plane_kind, r, {Catalog::prefix_of(r)});
  }
  return net;
}

}  // namespace icnsim

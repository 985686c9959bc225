#include "icnsim/trace.hpp"

#include <cstdio>

namespace icnsim {

std::string to_string(TraceKind k) {
  switch (k) {
    case TraceKind::Request: return "request";
    case TraceKind::Forward: return "forward";
    case TraceKind::Aggregate: return "aggregate";
    case TraceKind::Nack: return "nack";
    case TraceKind::Respond: return "respond";
    case TraceKind::DataFwd: return "data";
    case TraceKind::NackFwd: return "nackfwd";
    case TraceKind::Deliver: return "deliver";
    case TraceKind::Expire: return "expire";
    case TraceKind::PitExpire: return "pit-expire";
    case TraceKind::SatExpire: return "sat-expire";
    case TraceKind::Drop: return "drop";
    case TraceKind::Link: return "link";
    case TraceKind::Sample: return "sample";
  }
  return "?";
}

namespace {
std::string node_label(NodeId id, const std::vector<std::string>& names) {
  if (id == kLocalPeer) return "local";
  if (id < 0 || static_cast<std::size_t>(id) >= names.size()) return "-";
  return names[static_cast<std::size_t>(id)];
}
}  // namespace

std::string format_trace_line(const TraceRecord& r, const std::vector<std::string>& node_names) {
  char t[40];
  std::snprintf(t, sizeof t, "%.9f", r.time);
  std::string line = t;
  line += ' ';
  line += to_string(r.kind);
  line += ' ';
  line += node_label(r.node, node_names);
  line += ' ';
  line += node_label(r.peer, node_names);
  line += ' ';
  line += r.name.empty() ? "-" : r.name;
  line += " t=" + std::to_string(r.trace_id);
  line += " a=" + (r.a < 0 ? std::string("-") : std::to_string(r.a));
  line += " b=" + (r.b < 0 ? std::string("-") : std::to_string(r.b));
  line += " f=" + std::to_string(r.flow);
  if (!r.detail.empty()) {
    line += ' ';
    line += r.detail;
  }
  return line;
}

}  // namespace icnsim

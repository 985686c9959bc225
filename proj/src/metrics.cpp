#include "icnsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace icnsim {

MeanStd mean_stddev(std::span<const double> xs) {
  MeanStd r;
  r.count = xs.size();
  if (xs.empty()) return r;
  double sum = 0;
  for (double x : xs) sum += x;
  r.mean = sum / static_cast<double>(xs.size());
  double sq = 0;
  for (double x : xs) sq += (x - r.mean) * (x - r.mean);
  r.stddev = std::sqrt(sq / static_cast<double>(xs.size()));
  return r;
}

std::vector<TraceId> detect_deadlock(const RunResult& run) {
  std::vector<TraceId> out;
  Topology topo = run.initial_topology;
  // Topology state k = initial plus the first k link changes.
  const auto& changes = run.link_history;
  auto state_at = [&](SimTime t) {
    return static_cast<std::size_t>(
        std::upper_bound(changes.begin(), changes.end(), t,
                         [](SimTime x, const LinkChange& c) { return x < c.time; }) -
        changes.begin());
  };

  std::vector<const RequestRecord*> expired;
  for (const auto& r : run.requests) {
    if (r.outcome == Outcome::Expired) expired.push_back(&r);
  }
  std::stable_sort(expired.begin(), expired.end(), [&](const auto* a, const auto* b) {
    return a->issue < b->issue;
  });

  std::size_t applied = 0;
  auto advance_to = [&](std::size_t k) {
    if (k < applied) {
      topo = run.initial_topology;
      applied = 0;
    }
    for (; applied < k; ++applied) topo.set_link_up(changes[applied].link, changes[applied].up);
  };

  std::map<std::pair<std::size_t, std::vector<NodeId>>, std::vector<Distance>> cache;
  for (const auto* r : expired) {
    const auto holders = content_holders(r->name, run.announcements);
    if (holders.empty()) continue;
    bool viable = true;
    const std::size_t first = state_at(r->issue);
    const std::size_t last = state_at(r->done);
    for (std::size_t k = first; k <= last && viable; ++k) {
      auto key = std::make_pair(k, holders);
      auto it = cache.find(key);
      if (it == cache.end()) {
        advance_to(k);
        it = cache.emplace(std::move(key), hop_distances(topo, holders)).first;
      }
      viable = it->second[static_cast<std::size_t>(r->endpoint)] != kInfinity;
    }
    if (viable) out.push_back(r->id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SummaryRow summarize(const RunResult& run) {
  const Scenario& sc = run.scenario;
  SummaryRow row;
  row.scenario = sc.name;
  row.plane = sc.plane;
  row.caching = sc.caching;
  row.rate = sc.workload.rate;
  row.scale = sc.scale;
  row.seed = sc.seed;
  row.warmup = sc.warmup;
  row.sample_interval = sc.sample_interval;

  std::vector<double> table;
  std::vector<double> pending;
  for (const auto& s : run.samples) {
    if (s.time < sc.warmup) continue;
    for (auto v : s.table) table.push_back(v);
    for (auto v : s.pending_local) pending.push_back(v);
  }
  const auto t = mean_stddev(table);
  row.avg_table_size = t.mean;
  row.stddev_table_size = t.stddev;
  row.avg_pending_local = mean_stddev(pending).mean;

  std::vector<double> delays;
  for (const auto& r : run.requests) {
    if (r.issue < sc.warmup) continue;
    ++row.requests;
    switch (r.outcome) {
      case Outcome::Data:
        ++row.data;
        delays.push_back(r.delay());
        break;
      case Outcome::Nack: ++row.nacks; break;
      case Outcome::Expired: ++row.expired; break;
      case Outcome::Pending: break;
    }
  }
  const auto d = mean_stddev(delays);
  row.avg_delay = d.mean;
  row.stddev_delay = d.stddev;
  row.nack_rate =
      row.requests == 0 ? 0.0 : static_cast<double>(row.nacks) / static_cast<double>(row.requests);

  std::size_t deadlocked = 0;
  for (TraceId id : detect_deadlock(run)) {
    if (run.requests[id - 1].issue >= sc.warmup) ++deadlocked;
  }
  row.deadlocked_requests = deadlocked;
  return row;
}

namespace {
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}
}  // namespace

std::string summary_csv_header() {
  return "scenario,plane,caching_mode,rate,avg_table_size,stddev,avg_delay,stddev_delay,"
         "nack_rate,deadlocked_requests,avg_pending_local,requests,data,nacks,expired,scale,"
         "seed,warmup,sample_interval";
}

std::string summary_csv_row(const SummaryRow& r) {
  std::string s = r.scenario;
  s += ',' + to_string(r.plane);
  s += ',' + to_string(r.caching);
  s += ',' + num(r.rate);
  s += ',' + num(r.avg_table_size);
  s += ',' + num(r.stddev_table_size);
  s += ',' + num(r.avg_delay);
  s += ',' + num(r.stddev_delay);
  s += ',' + num(r.nack_rate);
  s += ',' + std::to_string(r.deadlocked_requests);
  s += ',' + num(r.avg_pending_local);
  s += ',' + std::to_string(r.requests);
  s += ',' + std::to_string(r.data);
  s += ',' + std::to_string(r.nacks);
  s += ',' + std::to_string(r.expired);
  s += ',' + num(r.scale);
  s += ',' + std::to_string(r.seed);
  s += ',' + num(r.warmup);
  s += ',' + num(r.sample_interval);
  return s;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << summary_csv_header() << '\n';
  for (const auto& r : rows) out << summary_csv_row(r) << '\n';
}

void write_requests_csv(std::ostream& out, const RunResult& run,
                        std::span<const TraceId> deadlocked) {
  const auto names = run.node_names();
  out << "trace_id,endpoint,local,name,issue,outcome,done,delay,nack_code,deadlocked\n";
  for (const auto& r : run.requests) {
    const bool dl = std::binary_search(deadlocked.begin(), deadlocked.end(), r.id);
    out << r.id << ',' << names[static_cast<std::size_t>(r.endpoint)] << ','
        << (r.local_app ? 1 : 0) << ',' << r.name.to_uri() << ',' << num(r.issue) << ','
        << to_string(r.outcome) << ',' << num(r.done) << ','
        << (r.outcome == Outcome::Data ? num(r.delay()) : std::string()) << ','
        << (r.nack_code ? to_string(*r.nack_code) : std::string()) << ',' << (dl ? 1 : 0)
        << '\n';
  }
}

std::string one_line_summary(const SummaryRow& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%s: plane=%s caching=%s rate=%g requests=%zu data=%zu nack=%zu expired=%zu "
                "deadlocked=%zu avg_table=%.3f avg_delay=%.6f",
                r.scenario.c_str(), to_string(r.plane).c_str(), to_string(r.caching).c_str(),
                r.rate, r.requests, r.data, r.nacks, r.expired, r.deadlocked_requests,
                r.avg_table_size, r.avg_delay);
  return buf;
}

}  // namespace icnsim

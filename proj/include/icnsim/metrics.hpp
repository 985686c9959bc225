#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "icnsim/simulator.hpp"

namespace icnsim {

struct MeanStd {
  double mean = 0;
  double stddev = 0;  // population
  std::size_t count = 0;
};

MeanStd mean_stddev(std::span<const double> xs);

struct SummaryRow {
  std::string scenario;
  Plane plane = Plane::Ndn;
  CachingMode caching = CachingMode::Edge;
  double rate = 0;
  double avg_table_size = 0;
  double stddev_table_size = 0;
  double avg_delay = 0;
  double stddev_delay = 0;
  double nack_rate = 0;
  std::size_t deadlocked_requests = 0;
  // metadata
  double avg_pending_local = 0;
  std::size_t requests = 0;
  std::size_t data = 0;
  std::size_t nacks = 0;
  std::size_t expired = 0;
  double scale = 1;
  std::uint64_t seed = 0;
  double warmup = 0;
  double sample_interval = 0;
};

/// Trace ids of expired requests whose endpoint kept an up path to some holder
/// of the content (producer or anchor) for the whole of [issue, expiry].
std::vector<TraceId> detect_deadlock(const RunResult& run);

/// Means and population standard deviations over post-warm-up samples and
/// requests; delay covers Data deliveries only.
SummaryRow summarize(const RunResult& run);

std::string summary_csv_header();
std::string summary_csv_row(const SummaryRow& row);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

/// Per-request rows, joinable with the trace on trace_id.
void write_requests_csv(std::ostream& out, const RunResult& run,
                        std::span<const TraceId> deadlocked);

/// "fig4: ndn edge rate=0 requests=3 data=0 nack=0 expired=3 deadlocked=3 ..."
std::string one_line_summary(const SummaryRow& row);

}  // namespace icnsim

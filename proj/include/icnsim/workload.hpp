#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icnsim/name.hpp"
#include "icnsim/packet.hpp"
#include "icnsim/rng.hpp"

namespace icnsim {

/// Zipf rank sampler over [1, N] by inverse CDF on precomputed cumulative weights.
class ZipfSampler {
 public:
  ZipfSampler(double alpha, std::uint64_t n);

  std::uint64_t sample(Rng& rng) const;
  double pmf(std::uint64_t rank) const;
  std::uint64_t size() const noexcept { return static_cast<std::uint64_t>(cdf_.size()); }
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
  std::vector<double> cdf_;  // cdf_[k-1] = P(rank <= k)
  double norm_;
};

inline std::uint64_t zipf_sample(const ZipfSampler& sampler, Rng& rng) {
  return sampler.sample(rng);
}

struct MulticastGroupConfig {
  NamePrefix group;                  // e.g. /mcast/g
  std::vector<NodeId> members;       // routers whose local consumers follow the flow
  NodeId source_anchor = -1;
  std::uint64_t flow_length = 1;     // objects o1..oN
  SimTime start = 0;
  SimTime interval = 1.0;
};

struct WorkloadConfig {
  std::uint64_t catalog_size = 1'000'000;
  double zipf_alpha = 0.7;
  double per_router_rate = 0;        // requests/second per router; 0 disables
  std::vector<MulticastGroupConfig> multicast_groups;
  std::uint64_t seed = 1;
};

/// Maps catalog ranks onto the per-router producer prefixes /p<i>.
class Catalog {
 public:
  Catalog(std::vector<NodeId> producers, std::uint64_t size);

  NodeId owner(std::uint64_t rank) const;
  ContentName name_of(std::uint64_t rank) const;
  static NamePrefix prefix_of(NodeId producer);
  const std::vector<NodeId>& producers() const noexcept { return producers_; }

 private:
  std::vector<NodeId> producers_;
  std::uint64_t size_;
};

struct ConsumerRequest {
  SimTime time;
  ContentName name;
};

/// Poisson request process for one router: exponential inter-arrival times,
/// names drawn by Zipf rank over the catalog.
class RequestStream {
 public:
  RequestStream(const ZipfSampler& zipf, const Catalog& catalog, double rate,
                std::uint64_t seed, SimTime start = 0);

  ConsumerRequest next();

 private:
  const ZipfSampler* zipf_;
  const Catalog* catalog_;
  double rate_;
  Rng rng_;
  SimTime clock_;
};

/// All requests of one router up to `horizon` (test and tooling convenience).
std::vector<ConsumerRequest> generate_requests(const ZipfSampler& zipf, const Catalog& catalog,
                                               double rate, std::uint64_t seed,
                                               SimTime horizon);

}  // namespace icnsim

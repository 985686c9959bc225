#include "icnsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icnsim {

ZipfSampler::ZipfSampler(double alpha, std::uint64_t n) : alpha_(alpha) {
  if (n == 0) throw std::invalid_argument("zipf: catalog must be non-empty");
  if (alpha < 0) throw std::invalid_argument("zipf: alpha must be >= 0");
  cdf_.resize(n);
  double acc = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    acc += std::pow(static_cast<double>(k), -alpha);
    cdf_[k - 1] = acc;
  }
  norm_ = acc;
  for (auto& c : cdf_) c /= norm_;
  cdf_.back() = 1.0;
}

std::uint64_t ZipfSampler::sample(Rng& rng) const {
  const double u = rng.uniform();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::uint64_t>(it - cdf_.begin()) + 1;
}

double ZipfSampler::pmf(std::uint64_t rank) const {
  if (rank < 1 || rank > size()) return 0;
  return std::pow(static_cast<double>(rank), -alpha_) / norm_;
}

Catalog::Catalog(std::vector<NodeId> producers, std::uint64_t size)
    : producers_(std::move(producers)), size_(size) {
  if (producers_.empty()) throw std::invalid_argument("catalog needs at least one producer");
}

NodeId Catalog::owner(std::uint64_t rank) const {
  return producers_[(rank - 1) % producers_.size()];
}

NamePrefix Catalog::prefix_of(NodeId producer) {
  return NamePrefix::parse("/p" + std::to_string(producer));
}

ContentName Catalog::name_of(std::uint64_t rank) const {
  return ContentName::parse(prefix_of(owner(rank)).key() + "/o" + std::to_string(rank));
}

RequestStream::RequestStream(const ZipfSampler& zipf, const Catalog& catalog, double rate,
                             std::uint64_t seed, SimTime start)
    : zipf_(&zipf), catalog_(&catalog), rate_(rate), rng_(seed), clock_(start) {
  if (!(rate > 0)) throw std::invalid_argument("request rate must be positive");
}

ConsumerRequest RequestStream::next() {
  clock_ += rng_.exponential(rate_);
  return {clock_, catalog_->name_of(zipf_->sample(rng_))};
}

std::vector<ConsumerRequest> generate_requests(const ZipfSampler& zipf, const Catalog& catalog,
                                               double rate, std::uint64_t seed,
                                               SimTime horizon) {
  RequestStream stream(zipf, catalog, rate, seed);
  std::vector<ConsumerRequest> out;
  for (;;) {
    auto r = stream.next();
    if (r.time > horizon) break;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace icnsim

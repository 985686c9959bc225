#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <unordered_map>

#include "icnsim/name.hpp"

namespace icnsim {

/// LRU cache of content objects keyed by exact name.
class ContentStore {
 public:
  explicit ContentStore(std::size_t capacity = 1000) : capacity_(capacity) {}

  /// Exact-match lookup; a hit refreshes recency.
  bool lookup(const ContentName& name);
  bool contains(const ContentName& name) const { return index_.count(name) != 0; }
  void insert(const ContentName& name, std::uint32_t payload_size);

  std::size_t size() const noexcept { return index_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  std::uint64_t hits() const noexcept { return hits_; }
  std::uint64_t misses() const noexcept { return misses_; }

 private:
  struct Entry {
    ContentName name;
    std::uint32_t payload_size;
  };
  std::size_t capacity_;
  std::list<Entry> lru_;  // front = most recent
  std::unordered_map<ContentName, std::list<Entry>::iterator> index_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

}  // namespace icnsim

#include "icnsim/content_store.hpp"

namespace icnsim {

bool ContentStore::lookup(const ContentName& name) {
  auto it = index_.find(name);
  if (it == index_.end()) {
    ++misses_;
    return false;
  }
  lru_.splice(lru_.begin(), lru_, it->second);
  ++hits_;
  return true;
}

void ContentStore::insert(const ContentName& name, std::uint32_t payload_size) {
  if (capacity_ == 0) return;
  if (auto it = index_.find(name); it != index_.end()) {
    it->second->payload_size = payload_size;
    lru_.splice(lru_.begin(), lru_, it->second);
    return;
  }
  if (index_.size() >= capacity_) {
    index_.erase(lru_.back().name);
    lru_.pop_back();
  }
  lru_.push_front(Entry{name, payload_size});
  index_.emplace(name, lru_.begin());
}

}  // namespace icnsim

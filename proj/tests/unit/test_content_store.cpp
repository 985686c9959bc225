#include <doctest.h>

#include "icnsim/content_store.hpp"

using namespace icnsim;

TEST_CASE("content store evicts least recently used") {
  ContentStore cs(2);
  const auto a = ContentName::parse("/a");
  const auto b = ContentName::parse("/b");
  const auto c = ContentName::parse("/c");
  cs.insert(a, 1024);
  cs.insert(b, 1024);
  CHECK(cs.lookup(a));  // a becomes most recent
  cs.insert(c, 1024);   // evicts b
  CHECK(cs.contains(a));
  CHECK_FALSE(cs.contains(b));
  CHECK(cs.contains(c));
  CHECK(cs.size() == 2);
  CHECK_FALSE(cs.lookup(b));
  CHECK(cs.hits() == 1);
  CHECK(cs.misses() == 1);
}

TEST_CASE("zero-capacity store never holds anything") {
  ContentStore cs(0);
  cs.insert(ContentName::parse("/a"), 1);
  CHECK(cs.size() == 0);
}

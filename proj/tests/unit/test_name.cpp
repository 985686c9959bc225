#include <doctest.h>

#include <random>

#include "icnsim/name.hpp"

using namespace icnsim;

TEST_CASE("name parsing canonicalizes and splits components") {
  const auto n = NamePrefix::parse("/a/bc/d");
  CHECK(n.size() == 3);
  CHECK(n.component(1) == "bc");
  CHECK(n.to_uri() == "/a/bc/d");
  CHECK(NamePrefix::parse("/").empty());
  CHECK(NamePrefix::parse("/").to_uri() == "/");
  CHECK(n.prefix(2) == NamePrefix::parse("/a/bc"));
  CHECK(NamePrefix::from_components(n.components()) == n);
}

TEST_CASE("malformed names are rejected") {
  CHECK_THROWS_AS(NamePrefix::parse("a/b"), NameError);
  CHECK_THROWS_AS(NamePrefix::parse("/a//b"), NameError);
  CHECK_THROWS_AS(ContentName::parse("/"), NameError);
}

TEST_CASE("prefix matching respects component boundaries") {
  const auto name = ContentName::parse("/gx/o1");
  CHECK_FALSE(name_matches_prefix(name, NamePrefix::parse("/g")));
  CHECK(name_matches_prefix(name, NamePrefix::parse("/gx")));
  CHECK(name_matches_prefix(name, NamePrefix{}));
  CHECK(name_matches_prefix(name, name));
  CHECK_FALSE(name_matches_prefix(NamePrefix::parse("/gx"), name));
}

TEST_CASE("longest prefix match agrees with a linear-scan oracle") {
  std::mt19937_64 gen(7);
  const std::vector<std::string> alphabet = {"a", "b", "ab", "ba"};
  auto random_name = [&](std::size_t max_len) {
    std::vector<std::string> comps(1 + gen() % max_len);
    for (auto& c : comps) c = alphabet[gen() % alphabet.size()];
    return NamePrefix::from_components(comps);
  };
  for (int round = 0; round < 300; ++round) {
    std::vector<NamePrefix> table(1 + gen() % 12);
    for (auto& p : table) p = random_name(3);
    const auto name = random_name(4);

    std::optional<NamePrefix> oracle;
    for (const auto& p : table) {
      // Oracle: compare components one by one.
      bool match = p.size() <= name.size();
      for (std::size_t i = 0; match && i < p.size(); ++i) match = p.component(i) == name.component(i);
      if (match && (!oracle || p.size() > oracle->size())) oracle = p;
    }
    const auto got = longest_prefix_match(name, table);
    REQUIRE(got.has_value() == oracle.has_value());
    if (got) CHECK(*got == *oracle);
  }
}

TEST_CASE("multicast naming convention") {
  const auto n = ContentName::parse("/mcast/g/o7");
  CHECK(is_multicast_name(n));
  CHECK(*multicast_group_of(n) == NamePrefix::parse("/mcast/g"));
  CHECK_FALSE(is_multicast_name(ContentName::parse("/p1/o1")));
  CHECK_FALSE(multicast_group_of(ContentName::parse("/p1/o1")).has_value());
  CHECK_FALSE(is_multicast_name(n, NamingConvention{""}));
}

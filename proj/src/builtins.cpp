#include <string_view>

#include "icnsim/scenario.hpp"

namespace icnsim {

namespace {

struct Embedded {
  const char* name;
  const char* text;
};

// Generated at configure time from scenarios/*.scn.
#include "builtin_data.inc"

std::string description_of(std::string_view text) {
  auto line = text.substr(0, text.find('\n'));
  if (line.starts_with('#')) line.remove_prefix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return std::string(line);
}

}  // namespace

const std::vector<BuiltinScenario>& builtin_scenarios() {
  static const std::vector<BuiltinScenario> all = [] {
    std::vector<BuiltinScenario> v;
    for (const auto& e : kEmbedded) v.push_back({e.name, description_of(e.text), e.text});
    return v;
  }();
  return all;
}

std::optional<BuiltinScenario> find_builtin(std::string_view name) {
  for (const auto& b : builtin_scenarios()) {
    if (b.name == name) return b;
  }
  return std::nullopt;
}

}  // namespace icnsim

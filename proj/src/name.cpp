#include "icnsim/name.hpp"

#include <algorithm>

namespace icnsim {

NamePrefix NamePrefix::parse(std::string_view uri) {
  if (uri.empty() || uri.front() != '/') {
    throw NameError("name must start with '/': \"" + std::string(uri) + "\"");
  }
  NamePrefix out;
  if (uri == "/") return out;
  std::size_t pos = 1;
  while (pos <= uri.size()) {
    std::size_t next = uri.find('/', pos);
    if (next == std::string_view::npos) next = uri.size();
    if (next == pos) {
      throw NameError("empty name component in \"" + std::string(uri) + "\"");
    }
    out.uri_ += '/';
    out.uri_.append(uri.substr(pos, next - pos));
    out.ends_.push_back(out.uri_.size());
    pos = next + 1;
  }
  return out;
}

NamePrefix NamePrefix::from_components(std::span<const std::string> components) {
  NamePrefix out;
  for (const auto& c : components) {
    if (c.empty() || c.find('/') != std::string::npos) {
      throw NameError("invalid name component \"" + c + "\"");
    }
    out.uri_ += '/';
    out.uri_ += c;
    out.ends_.push_back(out.uri_.size());
  }
  return out;
}

std::string_view NamePrefix::component(std::size_t i) const {
  if (i >= ends_.size()) throw std::out_of_range("name component index");
  std::size_t begin = (i == 0 ? 0 : ends_[i - 1]) + 1;
  return std::string_view(uri_).substr(begin, ends_[i] - begin);
}

std::vector<std::string> NamePrefix::components() const {
  std::vector<std::string> out;
  out.reserve(ends_.size());
  for (std::size_t i = 0; i < ends_.size(); ++i) out.emplace_back(component(i));
  return out;
}

NamePrefix NamePrefix::prefix(std::size_t count) const {
  NamePrefix out;
  count = std::min(count, ends_.size());
  if (count == 0) return out;
  out.uri_ = uri_.substr(0, ends_[count - 1]);
  out.ends_.assign(ends_.begin(), ends_.begin() + static_cast<std::ptrdiff_t>(count));
  return out;
}

ContentName ContentName::parse(std::string_view uri) {
  NamePrefix p = NamePrefix::parse(uri);
  if (p.empty()) throw NameError("content name needs at least one component");
  return ContentName(std::move(p));
}

ContentName ContentName::from_components(std::span<const std::string> components) {
  NamePrefix p = NamePrefix::from_components(components);
  if (p.empty()) throw NameError("content name needs at least one component");
  return ContentName(std::move(p));
}

bool name_matches_prefix(const NamePrefix& name, const NamePrefix& prefix) noexcept {
  const std::string& n = name.key();
  const std::string& p = prefix.key();
  if (prefix.size() > name.size() || p.size() > n.size()) return false;
  if (n.compare(0, p.size(), p) != 0) return false;
  // "/gx" must not match "/g": the prefix has to end on a component boundary.
  return n.size() == p.size() || n[p.size()] == '/';
}

std::optional<NamePrefix> longest_prefix_match(const NamePrefix& name,
                                               std::span<const NamePrefix> prefixes) {
  const NamePrefix* best = nullptr;
  for (const auto& p : prefixes) {
    if (!name_matches_prefix(name, p)) continue;
    if (best == nullptr || p.size() > best->size()) best = &p;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

bool is_multicast_name(const NamePrefix& name, const NamingConvention& conv) {
  if (conv.multicast_marker.empty() || name.empty()) return false;
  return name.component(0) == conv.multicast_marker;
}

std::optional<NamePrefix> multicast_group_of(const NamePrefix& name,
                                             const NamingConvention& conv) {
  if (!is_multicast_name(name, conv) || name.size() < 2) return std::nullopt;
  return name.prefix(2);
}

}  // namespace icnsim

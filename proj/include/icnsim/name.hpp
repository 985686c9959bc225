#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icnsim {

class NameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hierarchical name stored in its canonical "/c1/c2/..." form.
///
/// Component boundaries are kept as end offsets into the canonical string so
/// prefix tests reduce to a string comparison plus a boundary check.
class NamePrefix {
 public:
  NamePrefix() = default;  // the root prefix "/", zero components

  static NamePrefix parse(std::string_view uri);
  static NamePrefix from_components(std::span<const std::string> components);

  std::size_t size() const noexcept { return ends_.size(); }
  bool empty() const noexcept { return ends_.empty(); }
  std::string_view component(std::size_t i) const;
  std::vector<std::string> components() const;

  /// Canonical text form; "/" for the root prefix.
  std::string to_uri() const { return uri_.empty() ? std::string("/") : uri_; }
  const std::string& key() const noexcept { return uri_; }

  /// The first `count` components.
  NamePrefix prefix(std::size_t count) const;

  friend bool operator==(const NamePrefix& a, const NamePrefix& b) { return a.uri_ == b.uri_; }
  friend bool operator<(const NamePrefix& a, const NamePrefix& b) { return a.uri_ < b.uri_; }

 protected:
  std::string uri_;  // "" for root, otherwise "/a/b"
  std::vector<std::size_t> ends_;
};

/// Full name of one content object. Always has at least one component.
class ContentName : public NamePrefix {
 public:
  static ContentName parse(std::string_view uri);
  static ContentName from_components(std::span<const std::string> components);

  friend bool operator==(const ContentName& a, const ContentName& b) { return a.uri_ == b.uri_; }

 private:
  explicit ContentName(NamePrefix p) : NamePrefix(std::move(p)) {}
};

bool name_matches_prefix(const NamePrefix& name, const NamePrefix& prefix) noexcept;

/// Matching prefix with the greatest component count, if any.
std::optional<NamePrefix> longest_prefix_match(const NamePrefix& name,
                                               std::span<const NamePrefix> prefixes);

/// Naming convention that marks multicast content: the first component
/// equals the marker. An empty marker disables multicast entirely.
struct NamingConvention {
  std::string multicast_marker = "mcast";
};

bool is_multicast_name(const NamePrefix& name, const NamingConvention& conv = {});

/// The multicast group a name belongs to: marker plus the next component.
std::optional<NamePrefix> multicast_group_of(const NamePrefix& name,
                                             const NamingConvention& conv = {});

}  // namespace icnsim

template <>
struct std::hash<icnsim::NamePrefix> {
  std::size_t operator()(const icnsim::NamePrefix& n) const noexcept {
    return std::hash<std::string>{}(n.key());
  }
};

template <>
struct std::hash<icnsim::ContentName> {
  std::size_t operator()(const icnsim::ContentName& n) const noexcept {
    return std::hash<std::string>{}(n.key());
  }
};

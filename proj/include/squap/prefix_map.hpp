#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace squap {

/// Prefix label -> namespace IRI. Expansion is plain concatenation.
class PrefixMap {
 public:
  PrefixMap() = default;
  PrefixMap(std::initializer_list<std::pair<const std::string, std::string>> entries)
      : entries_(entries) {}

  void set(std::string prefix, std::string ns) { entries_[std::move(prefix)] = std::move(ns); }
  std::optional<std::string> namespace_of(std::string_view prefix) const;

  /// "squap:Value" -> full IRI; nullopt when the prefix is not declared or
  /// the input has no colon.
  std::optional<std::string> expand(std::string_view prefixed_name) const;

  /// Longest matching namespace whose remainder is a valid local name.
  std::optional<std::string> compact(std::string_view iri) const;

  /// Adds entries from `other` whose labels are not declared here yet.
  void merge(const PrefixMap& other);

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::string, std::string> entries_;
};

/// Local part that can be written after `prefix:` without escaping.
bool is_plain_local_name(std::string_view local) noexcept;

/// rdf, rdfs, owl, xsd, squap and the characteristic/factor stems.
PrefixMap standard_prefixes();

}  // namespace squap

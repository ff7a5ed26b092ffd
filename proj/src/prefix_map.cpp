#include "squap/prefix_map.hpp"

#include <cctype>

#include "squap/term.hpp"
#include "squap/vocab.hpp"

namespace squap {

std::optional<std::string> PrefixMap::namespace_of(std::string_view prefix) const {
  if (auto it = entries_.find(std::string(prefix)); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> PrefixMap::expand(std::string_view prefixed_name) const {
  const auto colon = prefixed_name.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto ns = namespace_of(prefixed_name.substr(0, colon));
  if (!ns) return std::nullopt;
  return *ns + std::string(prefixed_name.substr(colon + 1));
}

std::optional<std::string> PrefixMap::compact(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : entries_) {
    const std::string& ns = entry.second;
    if (ns.size() > iri.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    if (!is_plain_local_name(iri.substr(ns.size()))) continue;
    if (!best || ns.size() > best->second.size()) best = &entry;
  }
  if (!best) return std::nullopt;
  return best->first + ":" + std::string(iri.substr(best->second.size()));
}

void PrefixMap::merge(const PrefixMap& other) {
  for (const auto& [prefix, ns] : other.entries_) entries_.try_emplace(prefix, ns);
}

bool is_plain_local_name(std::string_view local) noexcept {
  if (local.empty()) return true;
  auto ok = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  };
  for (const char c : local) {
    if (!ok(c)) return false;
  }
  return local.front() != '-' && local.front() != '.' && local.back() != '.';
}

PrefixMap standard_prefixes() {
  return PrefixMap{
      {"rdf", std::string(ns::rdf)},
      {"rdfs", std::string(ns::rdfs)},
      {"owl", std::string(ns::owl)},
      {"xsd", std::string(ns::xsd)},
      {"squap", std::string(vocab::kBase)},
      {"factor", std::string(vocab::kFactorStem)},
      {"sw", std::string(vocab::kSoftwareQualityStem)},
      {"arc", std::string(vocab::kArchitecturalAlignmentStem)},
      {"prc", std::string(vocab::kProcessMaturityStem)},
  };
}

}  // namespace squap

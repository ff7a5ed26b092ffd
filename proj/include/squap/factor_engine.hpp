#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squap/catalog.hpp"
#include "squap/graph.hpp"
#include "squap/prefix_map.hpp"
#include "squap/vocab.hpp"

namespace squap {

/// any: a factor is enabled when at least one of its characteristics is
/// assessed. all: when every characteristic is.
enum class EnableMode { any, all };

std::string_view to_string(EnableMode mode) noexcept;
std::optional<EnableMode> parse_enable_mode(std::string_view text) noexcept;

struct CharacteristicSupport {
  std::string characteristic;
  std::vector<std::string> results;  // sorted, non-empty
};

struct EnabledFactor {
  std::string factor;
  std::string label;
  std::vector<CharacteristicSupport> matched;  // sorted by characteristic
  std::size_t used = 0;                        // characteristics the factor uses
  double coverage = 0.0;                       // matched.size() / used

  /// Every supporting result across characteristics, sorted and unique.
  std::vector<std::string> results() const;
};

/// The characteristics a factor uses: its catalog entry plus every
/// usesConcept / usesQualityCharacteristic object in the closure (which
/// includes links derived through `specializes`).
std::vector<std::string> used_characteristics(const Graph& closure, const FactorEntry& factor);

/// Sorted by factor IRI. A characteristic counts as assessed when an
/// instance of MeasurementResult `assesses` it. The closure should be
/// materialized so that subclass results are typed MeasurementResult.
std::vector<EnabledFactor> enabled_factors(const Graph& closure, const FactorCatalog& catalog,
                                           EnableMode mode = EnableMode::any);

struct OccurrenceMintingPolicy {
  std::string base = std::string(vocab::kOccurrenceBase);

  std::string mint(std::string_view label) const { return base + std::string(label); }
};

/// For each enabled factor F with label L: mints O = base + L and emits
/// O a FactorOccurrence, O satisfiesFactor F and, for each supporting result
/// R, R affectsMeasurementOf O and O isAffectedBy R. Only triples missing
/// from the closure are returned. Throws MintingError for a missing label or
/// two enabled factors minting the same IRI.
Graph materialize_occurrences(const Graph& closure, const FactorCatalog& catalog,
                              const OccurrenceMintingPolicy& policy = {},
                              EnableMode mode = EnableMode::any);

struct Evidence {
  std::string result;
  std::vector<std::string> metrics;
  std::vector<std::string> value_nodes;
  std::vector<Term> values;  // literals reached through hasValue/value
};

struct CharacteristicReport {
  std::string characteristic;
  std::optional<Dimension> dimension;
  std::vector<Evidence> evidence;  // empty when unassessed

  bool assessed() const noexcept { return !evidence.empty(); }
};

struct FactorReport {
  std::string factor;
  std::string label;
  std::vector<CharacteristicReport> characteristics;
};

/// Throws NotFound when the factor is not in the catalog.
FactorReport explain(std::string_view factor, const Graph& closure, const FactorCatalog& catalog);

std::string render_text(const FactorReport& report, const PrefixMap& prefixes);
/// One tab-separated record per (characteristic, result) pair; unassessed
/// characteristics get one record with empty result columns.
std::string render_records(const FactorReport& report);

std::string render_text(const std::vector<EnabledFactor>& factors, const PrefixMap& prefixes);
std::string render_records(const std::vector<EnabledFactor>& factors);

}  // namespace squap

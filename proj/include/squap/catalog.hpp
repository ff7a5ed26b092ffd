#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squap/graph.hpp"

namespace squap {

enum class Dimension { software_quality, architectural_alignment, process_maturity };

std::string_view to_string(Dimension d) noexcept;
/// Dimension class IRI (squap:SoftwareQuality, ...).
std::string_view dimension_class(Dimension d) noexcept;
std::optional<Dimension> dimension_of_class(std::string_view class_iri) noexcept;

struct CharacteristicUse {
  std::string iri;
  Dimension dimension;
};

struct FactorEntry {
  std::string iri;
  std::string label;
  std::vector<CharacteristicUse> characteristics;  // sorted by IRI
  bool stub = false;

  const CharacteristicUse* characteristic(std::string_view iri) const;
};

/// Quality factors and the characteristics each one uses, sorted by IRI.
class FactorCatalog {
 public:
  FactorCatalog() = default;
  explicit FactorCatalog(std::vector<FactorEntry> factors);

  const FactorEntry* find(std::string_view iri) const;
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  auto begin() const noexcept { return factors_.begin(); }
  auto end() const noexcept { return factors_.end(); }
  const std::vector<FactorEntry>& factors() const noexcept { return factors_; }

 private:
  std::vector<FactorEntry> factors_;
};

/// One entry per individual typed squap:SoftwareQualityFactor. Characteristics
/// come from usesQualityCharacteristic and usesConcept; each one's dimension
/// from its rdf:type. Throws CatalogError when a non-stub factor has no
/// characteristic (axiom 20) or a characteristic has zero or several
/// dimensions (axioms 8-15).
FactorCatalog load_catalog(const Graph& graph);

Graph default_catalog_graph();
const FactorCatalog& default_catalog();

}  // namespace squap

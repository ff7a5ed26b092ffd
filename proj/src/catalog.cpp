#include "squap/catalog.hpp"

#include <algorithm>
#include <set>

#include "squap/error.hpp"
#include "squap/model.hpp"
#include "squap/turtle.hpp"
#include "squap/vocab.hpp"

namespace squap {

std::string_view to_string(Dimension d) noexcept {
  switch (d) {
    case Dimension::software_quality: return "software quality";
    case Dimension::architectural_alignment: return "architectural alignment";
    case Dimension::process_maturity: return "process maturity";
  }
  return "?";
}

std::string_view dimension_class(Dimension d) noexcept {
  switch (d) {
    case Dimension::software_quality: return vocab::SoftwareQuality;
    case Dimension::architectural_alignment: return vocab::ArchitecturalAlignment;
    case Dimension::process_maturity: return vocab::ProcessMaturity;
  }
  return {};
}

std::optional<Dimension> dimension_of_class(std::string_view class_iri) noexcept {
  for (Dimension d : {Dimension::software_quality, Dimension::architectural_alignment,
                      Dimension::process_maturity}) {
    if (dimension_class(d) == class_iri) return d;
  }
  return std::nullopt;
}

const CharacteristicUse* FactorEntry::characteristic(std::string_view iri) const {
  auto it = std::find_if(characteristics.begin(), characteristics.end(),
                         [&](const CharacteristicUse& c) { return c.iri == iri; });
  return it == characteristics.end() ? nullptr : &*it;
}

FactorCatalog::FactorCatalog(std::vector<FactorEntry> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const FactorEntry& a, const FactorEntry& b) { return a.iri < b.iri; });
}

const FactorEntry* FactorCatalog::find(std::string_view iri) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), iri,
                             [](const FactorEntry& f, std::string_view key) { return f.iri < key; });
  return it != factors_.end() && it->iri == iri ? &*it : nullptr;
}

namespace {

Dimension dimension_for(const Graph& graph, const Term& characteristic,
                        const std::string& factor) {
  std::vector<Dimension> found;
  for (const Triple& t : graph.match(characteristic, vocab::term(vocab::type), std::nullopt)) {
    if (!t.object.is_iri()) continue;
    if (auto d = dimension_of_class(t.object.value)) found.push_back(*d);
  }
  if (found.size() > 1) {
    std::sort(found.begin(), found.end());
    // First axiom stating the clashing pair.
    const int axiom = found[0] == Dimension::software_quality
                          ? (found[1] == Dimension::architectural_alignment ? 9 : 12)
                          : 8;
    throw CatalogError(axiom, "characteristic <" + characteristic.value + "> is typed both " +
                                  std::string(to_string(found[0])) + " and " +
                                  std::string(to_string(found[1])) +
                                  ", which are disjoint (axiom " + std::to_string(axiom) + ")");
  }
  if (found.empty()) {
    throw CatalogError(6, "characteristic <" + characteristic.value + "> used by <" + factor +
                              "> is not typed SoftwareQuality, ArchitecturalAlignment or "
                              "ProcessMaturity (axiom 6)");
  }
  return found.front();
}

}  // namespace

FactorCatalog load_catalog(const Graph& graph) {
  const Term type = vocab::term(vocab::type);
  std::vector<FactorEntry> entries;
  for (const Triple& typed :
       graph.match(std::nullopt, type, vocab::term(vocab::SoftwareQualityFactor))) {
    if (!typed.subject.is_iri()) continue;
    FactorEntry entry;
    entry.iri = typed.subject.value;
    for (const Triple& l : graph.match(typed.subject, vocab::term(vocab::label), std::nullopt)) {
      if (l.object.is_literal() && (entry.label.empty() || l.object.value < entry.label)) {
        entry.label = l.object.value;
      }
    }
    entry.stub = graph.contains(
        Triple{typed.subject, vocab::term(vocab::catalogStatus), Term::literal("stub")});

    std::set<Term> used;
    for (std::string_view p : {vocab::usesQualityCharacteristic, vocab::usesConcept}) {
      for (const Triple& u : graph.match(typed.subject, vocab::term(p), std::nullopt)) {
        if (u.object.is_iri()) used.insert(u.object);
      }
    }
    for (const Term& c : used) {
      entry.characteristics.push_back({c.value, dimension_for(graph, c, entry.iri)});
    }
    if (entry.characteristics.empty() && !entry.stub) {
      throw CatalogError(20, "factor <" + entry.iri +
                                 "> uses no quality characteristic and is not marked as a "
                                 "stub (axiom 20: every factor uses some characteristic)");
    }
    entries.push_back(std::move(entry));
  }
  return FactorCatalog(std::move(entries));
}

Graph default_catalog_graph() { return parse_turtle(bundled_catalog_file().text).graph; }

const FactorCatalog& default_catalog() {
  static const FactorCatalog catalog = load_catalog(default_catalog_graph());
  return catalog;
}

}  // namespace squap

#include "squap/model.hpp"

#include <algorithm>
#include <array>

#include "squap/vocab.hpp"

namespace squap {

namespace detail {
extern const std::string_view kTboxTtl;
extern const std::string_view kFactorsTtl;
extern const std::string_view kAlignmentsTtl;
}  // namespace detail

const BundledFile& bundled_tbox_file() {
  static const BundledFile file{"squap.ttl", detail::kTboxTtl};
  return file;
}

const BundledFile& bundled_catalog_file() {
  static const BundledFile file{"factors.ttl", detail::kFactorsTtl};
  return file;
}

const BundledFile& bundled_alignments_file() {
  static const BundledFile file{"alignments-dul.ttl", detail::kAlignmentsTtl};
  return file;
}

std::vector<BundledFile> bundled_files() {
  return {bundled_tbox_file(), bundled_catalog_file(), bundled_alignments_file()};
}

const ParsedDocument& bundled_tbox_document() {
  static const ParsedDocument doc = parse_turtle(bundled_tbox_file().text);
  return doc;
}

Graph bundled_tbox() { return bundled_tbox_document().graph; }

const EntityFacets* EntityRegistry::find(std::string_view iri) const {
  auto it = entries_.find(iri);
  return it == entries_.end() ? nullptr : &it->second;
}

bool EntityRegistry::is_class(std::string_view iri) const {
  const auto* e = find(iri);
  return e && e->as_class;
}

bool EntityRegistry::is_individual(std::string_view iri) const {
  const auto* e = find(iri);
  return e && e->as_individual;
}

bool EntityRegistry::punned(std::string_view iri) const {
  const auto* e = find(iri);
  return e && e->punned();
}

namespace {

bool in_namespace(std::string_view iri, std::string_view ns) { return iri.starts_with(ns); }

// Vocabulary namespaces whose predicates describe the ontology itself
// rather than the domain.
bool is_schema_predicate(std::string_view p) {
  return in_namespace(p, ns::rdf) || in_namespace(p, ns::rdfs) || in_namespace(p, ns::owl) ||
         in_namespace(p, vocab::kOplaNs) || in_namespace(p, "http://purl.org/dc/terms/");
}

bool is_class_declaration(std::string_view type) {
  return type == vocab::owlClass || type == vocab::rdfsClass;
}

bool is_non_individual_declaration(std::string_view type) {
  static constexpr std::array<std::string_view, 7> kTypes = {
      vocab::owlObjectProperty,     vocab::owlDatatypeProperty, vocab::owlAnnotationProperty,
      vocab::owlTransitiveProperty, vocab::rdfProperty,         vocab::owlOntology,
      vocab::owlRestriction};
  return std::find(kTypes.begin(), kTypes.end(), type) != kTypes.end();
}

bool relates_classes(std::string_view p) {
  return p == vocab::subClassOf || p == vocab::owlEquivalentClass || p == vocab::owlDisjointWith;
}

bool targets_class(std::string_view p) {
  return p == "http://www.w3.org/2002/07/owl#allValuesFrom" ||
         p == "http://www.w3.org/2002/07/owl#someValuesFrom" ||
         p == "http://www.w3.org/2002/07/owl#onClass";
}

}  // namespace

EntityRegistry registry_of(const Graph& graph) {
  EntityRegistry reg;
  auto entry = [&](const Term& t) -> EntityFacets* {
    if (!t.is_iri()) return nullptr;
    return &reg.entries_[t.value];
  };
  for (const Triple& t : graph.triples()) {
    const std::string& p = t.predicate.value;
    if (p == kRdfType) {
      if (auto* o = entry(t.object)) o->as_class = true;
      auto* s = entry(t.subject);
      if (!s || !t.object.is_iri()) continue;
      if (is_class_declaration(t.object.value)) {
        s->as_class = true;
      } else if (!is_non_individual_declaration(t.object.value)) {
        s->as_individual = true;
        s->types.insert(t.object.value);
      }
    } else if (relates_classes(p)) {
      if (auto* s = entry(t.subject)) s->as_class = true;
      if (auto* o = entry(t.object)) o->as_class = true;
    } else if (targets_class(p)) {
      if (auto* o = entry(t.object)) o->as_class = true;
    } else if (!is_schema_predicate(p)) {
      if (auto* o = entry(t.object)) o->as_individual = true;
    }
  }
  return reg;
}

std::vector<PatternAnnotation> pattern_annotations(const Graph& graph) {
  std::vector<PatternAnnotation> out;
  for (const Triple& t : graph.match(std::nullopt, vocab::term(vocab::reusesPatternAsTemplate),
                                     std::nullopt)) {
    if (t.subject.is_iri() && t.object.is_iri()) {
      out.push_back({t.object.value, PatternRelation::reused_as_template, t.subject.value});
    }
  }
  for (const Triple& t :
       graph.match(std::nullopt, vocab::term(vocab::isNativeTo), std::nullopt)) {
    if (t.subject.is_iri() && t.object.is_iri()) {
      out.push_back({t.object.value, PatternRelation::native_to, t.subject.value});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace squap

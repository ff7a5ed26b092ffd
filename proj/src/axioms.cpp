#include "squap/axioms.hpp"

#include <algorithm>
#include <set>

#include "squap/vocab.hpp"

namespace squap {

namespace {

std::string s(std::string_view v) { return std::string(v); }

std::string local(std::string_view iri) {
  const auto cut = iri.find_last_of("/#");
  return s(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

}  // namespace

AxiomSet AxiomSet::squap() {
  using namespace vocab;
  AxiomSet a;
  a.subclasses = {
      {s(Value), s(Region), 1},
      {s(SoftwareQualityCharacteristic), s(Concept), 5},
      {s(ArchitecturalAlignment), s(SoftwareQualityCharacteristic), 7},
      {s(ProcessMaturity), s(SoftwareQualityCharacteristic), 10},
      {s(SoftwareQuality), s(SoftwareQualityCharacteristic), 13},
      {s(SoftwareQualityFactor), s(Description), 18},
      {s(ArchitecturalAlignmentResult), s(MeasurementResult), 24},
      {s(ProcessMaturityResult), s(MeasurementResult), 25},
      {s(SoftwareQualityResult), s(MeasurementResult), 26},
      {s(FactorOccurrence), s(Situation), 27},
  };
  a.disjoint = {
      {s(Concept), s(Description), {3, 4, 16}},
      {s(ArchitecturalAlignment), s(ProcessMaturity), {8, 11}},
      {s(ArchitecturalAlignment), s(SoftwareQuality), {9, 14}},
      {s(ProcessMaturity), s(SoftwareQuality), {12, 15}},
      {s(Description), s(Situation), {17}},
  };
  a.exact_cardinalities = {
      {s(Value), s(value), "http://www.w3.org/2000/01/rdf-schema#Literal", 2},
      {s(MeasurementResult), s(hasValue), s(Value), 22},
      {s(MeasurementResult), s(hasMetric), s(Metric), 23},
  };
  a.coverings = {{s(SoftwareQualityCharacteristic),
                  {s(ArchitecturalAlignment), s(ProcessMaturity), s(SoftwareQuality)},
                  6}};
  a.universals = {
      {s(SoftwareQualityFactor), s(usesQualityCharacteristic), s(SoftwareQualityCharacteristic), 19}};
  a.existentials = {
      {s(SoftwareQualityFactor), s(usesQualityCharacteristic), s(SoftwareQualityCharacteristic), 20},
      {s(MeasurementResult), s(assesses), s(SoftwareQualityCharacteristic), 21},
      {s(FactorOccurrence), s(isAffectedBy), s(MeasurementResult), 28},
      {s(FactorOccurrence), s(satisfiesFactor), s(SoftwareQualityFactor), 29},
  };
  a.chains = {{s(usesConcept), s(specializes), s(usesConcept), 30}};
  a.transitive = {{s(specializes)}};
  a.inverses = {{s(specializes), s(isSpecializedBy)}, {s(isAffectedBy), s(affectsMeasurementOf)}};
  a.subproperties = {{s(usesQualityCharacteristic), s(usesConcept)}};
  return a;
}

void AxiomSet::absorb(const Graph& graph) {
  auto iri_pairs = [&](std::string_view predicate) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Triple& t : graph.match(std::nullopt, vocab::term(predicate), std::nullopt)) {
      if (t.subject.is_iri() && t.object.is_iri()) out.emplace_back(t.subject.value, t.object.value);
    }
    return out;
  };

  for (auto& [sub, super] : iri_pairs(vocab::subClassOf)) {
    const bool known = std::any_of(subclasses.begin(), subclasses.end(), [&](const SubclassAxiom& x) {
      return x.sub == sub && x.super == super;
    });
    if (!known) subclasses.push_back({sub, super, 0});
  }
  for (auto& [c1, c2] : iri_pairs(vocab::owlDisjointWith)) {
    const bool known = std::any_of(disjoint.begin(), disjoint.end(), [&](const DisjointAxiom& x) {
      return (x.first == c1 && x.second == c2) || (x.first == c2 && x.second == c1);
    });
    if (!known) disjoint.push_back({c1, c2, {}});
  }
  for (const Triple& t : graph.match(std::nullopt, vocab::term(vocab::type),
                                     vocab::term(vocab::owlTransitiveProperty))) {
    if (!t.subject.is_iri()) continue;
    const bool known = std::any_of(transitive.begin(), transitive.end(),
                                   [&](const TransitiveAxiom& x) { return x.property == t.subject.value; });
    if (!known) transitive.push_back({t.subject.value});
  }
  for (auto& [p, q] : iri_pairs(vocab::owlInverseOf)) {
    const bool known = std::any_of(inverses.begin(), inverses.end(), [&](const InverseAxiom& x) {
      return (x.property == p && x.inverse == q) || (x.property == q && x.inverse == p);
    });
    if (!known) inverses.push_back({p, q});
  }
  for (auto& [sub, super] : iri_pairs(vocab::subPropertyOf)) {
    const bool known = std::any_of(subproperties.begin(), subproperties.end(),
                                   [&](const SubPropertyAxiom& x) { return x.sub == sub && x.super == super; });
    if (!known) subproperties.push_back({sub, super});
  }
}

std::map<int, std::string> AxiomSet::numbered() const {
  std::map<int, std::string> out;
  for (const auto& x : subclasses) {
    if (x.number) out[x.number] = local(x.sub) + " ⊑ " + local(x.super);
  }
  for (const auto& x : disjoint) {
    for (int n : x.numbers) out[n] = local(x.first) + " ⊓ " + local(x.second) + " ⊑ ⊥";
  }
  for (const auto& x : exact_cardinalities) {
    if (x.number) out[x.number] = local(x.cls) + " ⊑ =1 " + local(x.property) + "." + local(x.filler);
  }
  for (const auto& x : coverings) {
    if (!x.number) continue;
    std::string rhs;
    for (const auto& p : x.parts) rhs += (rhs.empty() ? "" : " ⊔ ") + local(p);
    out[x.number] = local(x.cls) + " ≡ " + rhs;
  }
  for (const auto& x : universals) {
    if (x.number) out[x.number] = local(x.cls) + " ⊑ ∀" + local(x.property) + "." + local(x.filler);
  }
  for (const auto& x : existentials) {
    if (x.number) out[x.number] = local(x.cls) + " ⊑ ∃" + local(x.property) + "." + local(x.filler);
  }
  for (const auto& x : chains) {
    if (x.number) {
      out[x.number] = local(x.first) + " ∘ " + local(x.second) + " ⊑ " + local(x.result);
    }
  }
  return out;
}

std::string axiom_label(const std::vector<int>& numbers) {
  if (numbers.empty()) return "asserted";
  std::string out = numbers.size() == 1 ? "axiom " : "axioms ";
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(numbers[i]);
  }
  return out;
}

}  // namespace squap

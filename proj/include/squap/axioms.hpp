#pragma once

#include <map>
#include <string>
#include <vector>

#include "squap/graph.hpp"

namespace squap {

// Axiom number 0 marks an axiom that did not come from the numbered SQuAP
// axiom list (e.g. one absorbed from a user ontology or a generated test
// axiom set).

struct SubclassAxiom {
  std::string sub;
  std::string super;
  int number = 0;
};

/// Classes `first` and `second` share no instances. `numbers` lists every
/// numbered axiom that states the pair; repeated statements collapse here.
struct DisjointAxiom {
  std::string first;
  std::string second;
  std::vector<int> numbers;
};

/// cls ⊑ ∀property.filler, applied as typing of the property's object.
struct UniversalAxiom {
  std::string cls;
  std::string property;
  std::string filler;
  int number = 0;
};

/// cls ⊑ ∃property.filler; checked in strict validation only.
struct ExistentialAxiom {
  std::string cls;
  std::string property;
  std::string filler;
  int number = 0;
};

/// cls ⊑ =1 property.filler; upper bound checked under the unique name
/// assumption, lower bound in strict validation.
struct ExactCardinalityAxiom {
  std::string cls;
  std::string property;
  std::string filler;
  int number = 0;
};

/// cls ≡ part_1 ⊔ ... ⊔ part_n; the ⊑ direction is audited, never split.
struct CoveringAxiom {
  std::string cls;
  std::vector<std::string> parts;
  int number = 0;
};

struct TransitiveAxiom {
  std::string property;
};

/// first ∘ second ⊑ result.
struct ChainAxiom {
  std::string first;
  std::string second;
  std::string result;
  int number = 0;
};

struct InverseAxiom {
  std::string property;
  std::string inverse;
};

struct SubPropertyAxiom {
  std::string sub;
  std::string super;
};

class AxiomSet {
 public:
  /// The numbered SQuAP axioms 1-30 plus the transitivity of specializes,
  /// the two inverse pairs and usesQualityCharacteristic ⊑ usesConcept.
  static AxiomSet squap();

  /// Adds axioms declared in `graph` with plain triples (rdfs:subClassOf
  /// between IRIs, owl:disjointWith, owl:TransitiveProperty, owl:inverseOf,
  /// rdfs:subPropertyOf) that are not already present.
  void absorb(const Graph& graph);

  /// Numbered axiom -> one-line description. Every number appears once.
  std::map<int, std::string> numbered() const;

  std::vector<SubclassAxiom> subclasses;
  std::vector<DisjointAxiom> disjoint;
  std::vector<UniversalAxiom> universals;
  std::vector<ExistentialAxiom> existentials;
  std::vector<ExactCardinalityAxiom> exact_cardinalities;
  std::vector<CoveringAxiom> coverings;
  std::vector<TransitiveAxiom> transitive;
  std::vector<ChainAxiom> chains;
  std::vector<InverseAxiom> inverses;
  std::vector<SubPropertyAxiom> subproperties;
};

/// "axiom 12" or "axioms 12, 15" for diagnostics; "asserted" for number 0.
std::string axiom_label(const std::vector<int>& numbers);

}  // namespace squap

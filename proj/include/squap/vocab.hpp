#pragma once

#include <string_view>

#include "squap/term.hpp"

/// IRIs of the SQuAP vocabulary. Individuals are named with their type
/// stem in front of the local id, e.g. ProcessMaturity/Documentation.
namespace squap::vocab {

inline constexpr std::string_view kBase = "https://w3id.org/squap/";
inline constexpr std::string_view kFactorStem = "https://w3id.org/squap/Factor/";
inline constexpr std::string_view kSoftwareQualityStem = "https://w3id.org/squap/SoftwareQuality/";
inline constexpr std::string_view kArchitecturalAlignmentStem = "https://w3id.org/squap/ArchitecturalAlignment/";
inline constexpr std::string_view kProcessMaturityStem = "https://w3id.org/squap/ProcessMaturity/";

// Classes
inline constexpr std::string_view Region = "https://w3id.org/squap/Region";
inline constexpr std::string_view Value = "https://w3id.org/squap/Value";
inline constexpr std::string_view Parameter = "https://w3id.org/squap/Parameter";
inline constexpr std::string_view Metric = "https://w3id.org/squap/Metric";
inline constexpr std::string_view Concept = "https://w3id.org/squap/Concept";
inline constexpr std::string_view Description = "https://w3id.org/squap/Description";
inline constexpr std::string_view Situation = "https://w3id.org/squap/Situation";
inline constexpr std::string_view SoftwareQualityCharacteristic = "https://w3id.org/squap/SoftwareQualityCharacteristic";
inline constexpr std::string_view SoftwareQuality = "https://w3id.org/squap/SoftwareQuality";
inline constexpr std::string_view ArchitecturalAlignment = "https://w3id.org/squap/ArchitecturalAlignment";
inline constexpr std::string_view ProcessMaturity = "https://w3id.org/squap/ProcessMaturity";
inline constexpr std::string_view SoftwareQualityFactor = "https://w3id.org/squap/SoftwareQualityFactor";
inline constexpr std::string_view MeasurementResult = "https://w3id.org/squap/MeasurementResult";
inline constexpr std::string_view SoftwareQualityResult = "https://w3id.org/squap/SoftwareQualityResult";
inline constexpr std::string_view ArchitecturalAlignmentResult = "https://w3id.org/squap/ArchitecturalAlignmentResult";
inline constexpr std::string_view ProcessMaturityResult = "https://w3id.org/squap/ProcessMaturityResult";
inline constexpr std::string_view FactorOccurrence = "https://w3id.org/squap/FactorOccurrence";

// Properties
inline constexpr std::string_view usesQualityCharacteristic = "https://w3id.org/squap/usesQualityCharacteristic";
inline constexpr std::string_view usesConcept = "https://w3id.org/squap/usesConcept";
inline constexpr std::string_view isConceptUsedIn = "https://w3id.org/squap/isConceptUsedIn";
inline constexpr std::string_view specializes = "https://w3id.org/squap/specializes";
inline constexpr std::string_view isSpecializedBy = "https://w3id.org/squap/isSpecializedBy";
inline constexpr std::string_view assesses = "https://w3id.org/squap/assesses";
inline constexpr std::string_view hasValue = "https://w3id.org/squap/hasValue";
inline constexpr std::string_view hasMetric = "https://w3id.org/squap/hasMetric";
inline constexpr std::string_view hasParameter = "https://w3id.org/squap/hasParameter";
inline constexpr std::string_view parametrizes = "https://w3id.org/squap/parametrizes";
inline constexpr std::string_view value = "https://w3id.org/squap/value";
inline constexpr std::string_view isAffectedBy = "https://w3id.org/squap/isAffectedBy";
inline constexpr std::string_view affectsMeasurementOf = "https://w3id.org/squap/affectsMeasurementOf";
inline constexpr std::string_view satisfiesFactor = "https://w3id.org/squap/satisfiesFactor";
inline constexpr std::string_view isSettingFor = "https://w3id.org/squap/isSettingFor";
inline constexpr std::string_view classifies = "https://w3id.org/squap/classifies";
inline constexpr std::string_view isClassifiedBy = "https://w3id.org/squap/isClassifiedBy";
inline constexpr std::string_view satisfies = "https://w3id.org/squap/satisfies";
inline constexpr std::string_view isSatisfied = "https://w3id.org/squap/isSatisfied";
inline constexpr std::string_view catalogStatus = "https://w3id.org/squap/catalogStatus";

// RDF/RDFS/OWL terms the reasoner and loaders read.
inline constexpr std::string_view type = kRdfType;
inline constexpr std::string_view label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view subClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view subPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view rdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view rdfProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr std::string_view owlClass = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view owlThing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view owlOntology = "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view owlRestriction = "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view owlObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view owlDatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view owlAnnotationProperty = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view owlTransitiveProperty = "http://www.w3.org/2002/07/owl#TransitiveProperty";
inline constexpr std::string_view owlNamedIndividual = "http://www.w3.org/2002/07/owl#NamedIndividual";
inline constexpr std::string_view owlDisjointWith = "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view owlEquivalentClass = "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view owlInverseOf = "http://www.w3.org/2002/07/owl#inverseOf";

// OPLa pattern annotations.
inline constexpr std::string_view kOplaNs = "http://ontologydesignpatterns.org/opla#";
inline constexpr std::string_view reusesPatternAsTemplate = "http://ontologydesignpatterns.org/opla#reusesPatternAsTemplate";
inline constexpr std::string_view isNativeTo = "http://ontologydesignpatterns.org/opla#isNativeTo";
inline constexpr std::string_view kDescriptionAndSituationPattern = "http://ontologydesignpatterns.org/cp/owl/descriptionandsituation.owl";
inline constexpr std::string_view kParameterRegionPattern = "http://ontologydesignpatterns.org/cp/owl/parameterregion.owl";

/// Default prefix for minted factor occurrences.
inline constexpr std::string_view kOccurrenceBase = "https://w3id.org/squap/example/gqm/";

inline Term term(std::string_view iri) { return Term::iri(std::string(iri)); }

}  // namespace squap::vocab

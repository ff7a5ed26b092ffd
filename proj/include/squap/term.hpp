#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace squap {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";

// Order matters: serialization sorts IRIs before literals before blank nodes.
enum class TermKind : std::uint8_t { iri, literal, blank };

/// An RDF term. Equality is purely lexical: "7"^^xsd:integer and
/// "07"^^xsd:integer are different terms.
struct Term {
  TermKind kind = TermKind::iri;
  std::string value;     // IRI, lexical form, or blank-node label
  std::string datatype;  // literals only
  std::string language;  // language-tagged literals only

  static Term iri(std::string iri);
  static Term literal(std::string lexical, std::string datatype = std::string(kXsdString));
  static Term lang_literal(std::string lexical, std::string language);
  static Term integer(long long value);
  static Term blank(std::string label);

  bool is_iri() const noexcept { return kind == TermKind::iri; }
  bool is_literal() const noexcept { return kind == TermKind::literal; }
  bool is_blank() const noexcept { return kind == TermKind::blank; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// True for `scheme:rest` with an RFC 3986 scheme.
bool is_absolute_iri(std::string_view iri) noexcept;

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Throws StructureError for a literal subject or a non-IRI predicate.
void check_well_formed(const Triple& t);

std::string to_ntriples(const Term& t);
std::string to_ntriples(const Triple& t);

inline Term iri(std::string_view s) { return Term::iri(std::string(s)); }
inline Triple triple(std::string_view s, std::string_view p, std::string_view o) {
  return {iri(s), iri(p), iri(o)};
}
inline Triple triple(std::string_view s, std::string_view p, Term o) {
  return {iri(s), iri(p), std::move(o)};
}

}  // namespace squap

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "squap/error.hpp"
#include "squap/graph.hpp"
#include "squap/prefix_map.hpp"

namespace squap {

enum class ParseErrorKind {
  unexpected_token,
  undeclared_prefix,
  bad_iri,
  bad_literal,
  unterminated_statement,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

/// First syntax error in a Turtle document. Line and column are 1-based and
/// point at the offending token.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, std::string message);

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
  std::string detail_;
};

struct ParsedDocument {
  Graph graph;
  PrefixMap prefixes;
};

/// Parses the Turtle subset: @prefix/@base, <IRI>, prefixed names, `a`,
/// `;` and `,` lists, quoted strings with optional @lang or ^^datatype,
/// bare integers, _:labels and # comments. Throws ParseError on the first
/// error; no partial graph is returned.
ParsedDocument parse_turtle(std::string_view source,
                            const std::optional<std::string>& base = std::nullopt);

/// Reads and parses a file. I/O failures raise squap::Error.
ParsedDocument parse_turtle_file(const std::string& path);

/// Deterministic Turtle: every prefix declaration in label order, then
/// subjects, predicates and objects in term order (rdf:type first among
/// predicates), grouped by subject.
std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes);

/// A single term as it would appear in serialize_turtle output.
std::string to_turtle(const Term& term, const PrefixMap& prefixes);
std::string to_turtle(const Triple& triple, const PrefixMap& prefixes);

/// One N-Triples statement per line, sorted.
std::string serialize_ntriples(const Graph& graph);

}  // namespace squap

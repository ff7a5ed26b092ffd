#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "squap/turtle.hpp"

namespace squap {

namespace {

bool is_integer_lexical(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string write_iri(const std::string& iri, const PrefixMap& prefixes) {
  if (auto pname = prefixes.compact(iri)) return *pname;
  return "<" + iri + ">";
}

std::string write_term(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind) {
    case TermKind::iri:
      return write_iri(t.value, prefixes);
    case TermKind::blank:
      return "_:" + t.value;
    case TermKind::literal:
      if (t.language.empty() && t.datatype == kXsdInteger && is_integer_lexical(t.value)) {
        return t.value;
      }
      if (t.language.empty() && t.datatype != kXsdString) {
        // Reuse the N-Triples escaping for the lexical form, then shorten the datatype.
        const std::string quoted = to_ntriples(Term::literal(t.value));
        return quoted + "^^" + write_iri(t.datatype, prefixes);
      }
      return to_ntriples(t);
  }
  return {};
}

}  // namespace

std::string to_turtle(const Term& term, const PrefixMap& prefixes) {
  return write_term(term, prefixes);
}

std::string to_turtle(const Triple& t, const PrefixMap& prefixes) {
  return write_term(t.subject, prefixes) + " " +
         (t.predicate.value == kRdfType ? std::string("a") : write_term(t.predicate, prefixes)) +
         " " + write_term(t.object, prefixes) + " .";
}

std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [prefix, ns] : prefixes.entries()) {
    out << "@prefix " << prefix << ": <" << ns << "> .\n";
  }

  // Term order, except that rdf:type leads each subject's predicates.
  auto before = [](const Triple& a, const Triple& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    const bool at = a.predicate.value == kRdfType;
    const bool bt = b.predicate.value == kRdfType;
    if (at != bt) return at;
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return a.object < b.object;
  };
  const auto all = graph.triples();
  const std::set<Triple, decltype(before)> sorted(all.begin(), all.end(), before);
  if (sorted.empty()) return out.str();
  out << '\n';

  const Term* subject = nullptr;
  const Term* predicate = nullptr;
  for (const Triple& t : sorted) {
    if (!subject || *subject != t.subject) {
      if (subject) out << " .\n\n";
      out << write_term(t.subject, prefixes) << ' ';
      predicate = nullptr;
    } else if (*predicate != t.predicate) {
      out << " ;\n    ";
      predicate = nullptr;
    } else {
      out << " ,\n        ";
    }
    if (!predicate) {
      out << (t.predicate.value == kRdfType ? "a" : write_term(t.predicate, prefixes)) << ' ';
    }
    out << write_term(t.object, prefixes);
    subject = &t.subject;
    predicate = &t.predicate;
  }
  out << " .\n";
  return out.str();
}

std::string serialize_ntriples(const Graph& graph) {
  const auto all = graph.triples();
  std::set<std::string> lines;
  for (const Triple& t : all) lines.insert(to_ntriples(t));
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  return out;
}

}  // namespace squap

#include "squap/term.hpp"

#include <cctype>
#include <cstdio>
#include <functional>

#include "squap/error.hpp"

namespace squap {

bool is_absolute_iri(std::string_view iri) noexcept {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    const char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return false;
}

Term Term::iri(std::string iri) {
  if (!is_absolute_iri(iri)) throw StructureError("IRI is not absolute: <" + iri + ">");
  return Term{TermKind::iri, std::move(iri), {}, {}};
}

Term Term::literal(std::string lexical, std::string datatype) {
  if (!is_absolute_iri(datatype)) {
    throw StructureError("literal datatype is not an absolute IRI: <" + datatype + ">");
  }
  return Term{TermKind::literal, std::move(lexical), std::move(datatype), {}};
}

Term Term::lang_literal(std::string lexical, std::string language) {
  if (language.empty()) throw StructureError("empty language tag");
  return Term{TermKind::literal, std::move(lexical), std::string(kRdfLangString),
              std::move(language)};
}

Term Term::integer(long long value) {
  return Term{TermKind::literal, std::to_string(value), std::string(kXsdInteger), {}};
}

Term Term::blank(std::string label) {
  if (label.empty()) throw StructureError("empty blank node label");
  return Term{TermKind::blank, std::move(label), {}, {}};
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::hash<std::string_view> h;
  std::size_t seed = static_cast<std::size_t>(t.kind);
  auto mix = [&seed](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
  mix(h(t.value));
  mix(h(t.datatype));
  mix(h(t.language));
  return seed;
}

void check_well_formed(const Triple& t) {
  if (t.subject.is_literal()) {
    throw StructureError("literal in subject position: " + to_ntriples(t.subject));
  }
  if (!t.predicate.is_iri()) {
    throw StructureError("predicate is not an IRI: " + to_ntriples(t.predicate));
  }
}

namespace {

void escape_into(std::string& out, std::string_view s) {
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

}  // namespace

std::string to_ntriples(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::iri:
      out = "<" + t.value + ">";
      break;
    case TermKind::blank:
      out = "_:" + t.value;
      break;
    case TermKind::literal:
      out += '"';
      escape_into(out, t.value);
      out += '"';
      if (!t.language.empty()) {
        out += "@" + t.language;
      } else if (t.datatype != kXsdString) {
        out += "^^<" + t.datatype + ">";
      }
      break;
  }
  return out;
}

std::string to_ntriples(const Triple& t) {
  return to_ntriples(t.subject) + " " + to_ntriples(t.predicate) + " " + to_ntriples(t.object) +
         " .";
}

}  // namespace squap

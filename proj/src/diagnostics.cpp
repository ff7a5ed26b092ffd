#include <algorithm>
#include <sstream>

#include "squap/reasoner.hpp"
#include "squap/turtle.hpp"

namespace squap {

std::string_view to_string(Severity s) noexcept {
  switch (s) {
    case Severity::warning: return "warning";
    case Severity::constraint_violation: return "constraint-violation";
    case Severity::inconsistency: return "inconsistency";
  }
  return "?";
}

Severity max_severity(const std::vector<Diagnostic>& diagnostics, Severity floor) {
  Severity out = floor;
  for (const auto& d : diagnostics) out = std::max(out, d.severity);
  return out;
}

std::size_t count_at_least(const std::vector<Diagnostic>& diagnostics, Severity severity) {
  return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                [&](const Diagnostic& d) { return d.severity >= severity; }));
}

std::string render_text(const std::vector<Diagnostic>& diagnostics, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& d : diagnostics) {
    out << '[' << to_string(d.severity) << "] " << d.rule << ": " << d.message << '\n';
    for (const auto& t : d.triples) out << "    " << to_turtle(t, prefixes) << '\n';
  }
  return out.str();
}

namespace {

std::string one_line(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

}  // namespace

std::string render_records(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    std::string triples;
    for (const auto& t : d.triples) triples += (triples.empty() ? "" : " ") + to_ntriples(t);
    out += d.rule + '\t' + std::string(to_string(d.severity)) + '\t' + triples + '\t' +
           one_line(d.message) + '\n';
  }
  return out;
}

}  // namespace squap

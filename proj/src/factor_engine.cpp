#include "squap/factor_engine.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "squap/error.hpp"
#include "squap/turtle.hpp"
#include "table.hpp"

namespace squap {

std::string_view to_string(EnableMode mode) noexcept {
  return mode == EnableMode::any ? "any" : "all";
}

std::optional<EnableMode> parse_enable_mode(std::string_view text) noexcept {
  if (text == "any") return EnableMode::any;
  if (text == "all") return EnableMode::all;
  return std::nullopt;
}

std::vector<std::string> EnabledFactor::results() const {
  std::set<std::string> all;
  for (const auto& m : matched) all.insert(m.results.begin(), m.results.end());
  return {all.begin(), all.end()};
}

namespace {

std::vector<std::string> objects(const Graph& g, std::string_view subject, std::string_view property) {
  std::vector<std::string> out;
  for (const Triple& t : g.match(Term::iri(std::string(subject)), vocab::term(property), std::nullopt)) {
    if (t.object.is_iri()) out.push_back(t.object.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Measurement results assessing the characteristic. Other subjects of
// `assesses` (a metric, say) are not evidence.
std::vector<std::string> assessing_results(const Graph& g, const std::string& characteristic) {
  std::vector<std::string> out;
  const Term result_class = vocab::term(vocab::MeasurementResult);
  for (const Triple& t : g.match(std::nullopt, vocab::term(vocab::assesses), Term::iri(characteristic))) {
    if (t.subject.is_iri() && g.contains(Triple{t.subject, vocab::term(vocab::type), result_class})) {
      out.push_back(t.subject.value);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<std::string> used_characteristics(const Graph& closure, const FactorEntry& factor) {
  std::set<std::string> used;
  for (const auto& c : factor.characteristics) used.insert(c.iri);
  for (std::string_view p : {vocab::usesConcept, vocab::usesQualityCharacteristic}) {
    for (auto& c : objects(closure, factor.iri, p)) used.insert(std::move(c));
  }
  return {used.begin(), used.end()};
}

std::vector<EnabledFactor> enabled_factors(const Graph& closure, const FactorCatalog& catalog,
                                           EnableMode mode) {
  std::vector<EnabledFactor> out;
  for (const FactorEntry& factor : catalog) {
    const auto used = used_characteristics(closure, factor);
    EnabledFactor e{factor.iri, factor.label, {}, used.size(), 0.0};
    for (const auto& c : used) {
      auto results = assessing_results(closure, c);
      if (!results.empty()) e.matched.push_back({c, std::move(results)});
    }
    if (e.matched.empty()) continue;
    if (mode == EnableMode::all && e.matched.size() != used.size()) continue;
    e.coverage = static_cast<double>(e.matched.size()) / static_cast<double>(used.size());
    out.push_back(std::move(e));
  }
  return out;
}

Graph materialize_occurrences(const Graph& closure, const FactorCatalog& catalog,
                              const OccurrenceMintingPolicy& policy, EnableMode mode) {
  const auto enabled = enabled_factors(closure, catalog, mode);
  std::map<std::string, std::string> minted;  // occurrence IRI -> factor
  for (const auto& e : enabled) {
    if (e.label.empty()) {
      throw MintingError("factor <" + e.factor + "> has no rdfs:label to mint an occurrence IRI from");
    }
    const std::string iri = policy.mint(e.label);
    if (!is_absolute_iri(iri)) {
      throw MintingError("minted occurrence <" + iri + "> for <" + e.factor + "> is not an absolute IRI");
    }
    auto [it, inserted] = minted.emplace(iri, e.factor);
    if (!inserted) {
      throw MintingError("factors <" + it->second + "> and <" + e.factor +
                         "> both mint occurrence <" + iri + ">");
    }
  }

  Graph out;
  auto add = [&](Triple t) {
    if (!closure.contains(t)) out.insert(t);
  };
  for (const auto& e : enabled) {
    const Term occurrence = Term::iri(policy.mint(e.label));
    add({occurrence, vocab::term(vocab::type), vocab::term(vocab::FactorOccurrence)});
    add({occurrence, vocab::term(vocab::satisfiesFactor), Term::iri(e.factor)});
    for (const auto& r : e.results()) {
      add({Term::iri(r), vocab::term(vocab::affectsMeasurementOf), occurrence});
      add({occurrence, vocab::term(vocab::isAffectedBy), Term::iri(r)});
    }
  }
  return out;
}

FactorReport explain(std::string_view factor, const Graph& closure, const FactorCatalog& catalog) {
  const FactorEntry* entry = catalog.find(factor);
  if (!entry) throw NotFound("factor <" + std::string(factor) + "> is not in the catalog");
  FactorReport report{entry->iri, entry->label, {}};
  for (const auto& c : used_characteristics(closure, *entry)) {
    CharacteristicReport row{c, std::nullopt, {}};
    if (const auto* use = entry->characteristic(c)) {
      row.dimension = use->dimension;
    } else {
      for (const auto& type : objects(closure, c, vocab::type)) {
        if (auto d = dimension_of_class(type)) row.dimension = d;
      }
    }
    for (const auto& r : assessing_results(closure, c)) {
      Evidence ev{r, objects(closure, r, vocab::hasMetric), objects(closure, r, vocab::hasValue), {}};
      for (const auto& v : ev.value_nodes) {
        for (const Triple& t : closure.match(Term::iri(v), vocab::term(vocab::value), std::nullopt)) {
          ev.values.push_back(t.object);
        }
      }
      std::sort(ev.values.begin(), ev.values.end());
      row.evidence.push_back(std::move(ev));
    }
    report.characteristics.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& i : items) out += (out.empty() ? "" : std::string(sep)) + i;
  return out;
}

std::vector<std::string> compacted(const std::vector<std::string>& iris, const PrefixMap& prefixes) {
  std::vector<std::string> out;
  for (const auto& i : iris) out.push_back(to_turtle(Term::iri(i), prefixes));
  return out;
}

std::string format_coverage(double c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", c);
  return buf;
}

}  // namespace

std::string render_text(const FactorReport& report, const PrefixMap& prefixes) {
  std::string out = "factor " + to_turtle(Term::iri(report.factor), prefixes) + " (" + report.label + ")\n";
  if (report.characteristics.empty()) return out + "  uses no characteristics\n";
  for (const auto& c : report.characteristics) {
    out += "  " + to_turtle(Term::iri(c.characteristic), prefixes) + " [" +
           (c.dimension ? std::string(to_string(*c.dimension)) : std::string("unknown dimension")) + "]: ";
    if (!c.assessed()) {
      out += "not assessed\n";
      continue;
    }
    out += "assessed\n";
    for (const auto& ev : c.evidence) {
      std::vector<std::string> values;
      for (const auto& v : ev.values) values.push_back(to_turtle(v, prefixes));
      out += "    by " + to_turtle(Term::iri(ev.result), prefixes) +
             "  metric " + (ev.metrics.empty() ? "-" : join(compacted(ev.metrics, prefixes), ", ")) +
             "  value " + (values.empty() ? "-" : join(values, ", ")) + "\n";
    }
  }
  return out;
}

std::string render_records(const FactorReport& report) {
  std::string out;
  for (const auto& c : report.characteristics) {
    const std::string head = report.factor + '\t' + c.characteristic + '\t' +
                             (c.dimension ? std::string(to_string(*c.dimension)) : "") + '\t' +
                             (c.assessed() ? "assessed" : "unassessed");
    if (!c.assessed()) {
      out += head + "\t\t\t\n";
      continue;
    }
    for (const auto& ev : c.evidence) {
      std::vector<std::string> values;
      for (const auto& v : ev.values) values.push_back(to_ntriples(v));
      out += head + '\t' + ev.result + '\t' + join(ev.metrics, " ") + '\t' + join(values, " ") + '\n';
    }
  }
  return out;
}

std::string render_text(const std::vector<EnabledFactor>& factors, const PrefixMap& prefixes) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : factors) {
    rows.push_back({to_turtle(Term::iri(f.factor), prefixes),
                    std::to_string(f.matched.size()) + "/" + std::to_string(f.used),
                    format_coverage(f.coverage), join(compacted(f.results(), prefixes), ", ")});
  }
  return detail::render_table({"factor", "matched", "coverage", "results"}, rows);
}

std::string render_records(const std::vector<EnabledFactor>& factors) {
  std::string out;
  for (const auto& f : factors) {
    out += f.factor + '\t' + f.label + '\t' + std::to_string(f.matched.size()) + '\t' +
           std::to_string(f.used) + '\t' + format_coverage(f.coverage) + '\t' +
           join(f.results(), " ") + '\n';
  }
  return out;
}

}  // namespace squap

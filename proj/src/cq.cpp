#include "squap/cq.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "squap/catalog.hpp"
#include "squap/turtle.hpp"
#include "squap/vocab.hpp"
#include "table.hpp"

namespace squap {

std::string_view to_string(CQ id) noexcept {
  switch (id) {
    case CQ::cq1: return "CQ1";
    case CQ::cq2: return "CQ2";
    case CQ::cq3: return "CQ3";
    case CQ::cq4: return "CQ4";
    case CQ::cq5: return "CQ5";
  }
  return "CQ?";
}

std::optional<CQ> parse_cq(std::string_view text) noexcept {
  if (text.size() != 3 || std::tolower(static_cast<unsigned char>(text[0])) != 'c' ||
      std::tolower(static_cast<unsigned char>(text[1])) != 'q' || text[2] < '1' || text[2] > '5') {
    return std::nullopt;
  }
  return static_cast<CQ>(text[2] - '0');
}

bool needs_parameter(CQ id) noexcept { return id != CQ::cq1; }

namespace {

// Collects bindings, remembering whether any supporting path is fully asserted.
class Collector {
 public:
  explicit Collector(const InferenceTrace* trace) : trace_(trace) {}

  void add(std::vector<Term> values, std::initializer_list<Triple> path) {
    bool asserted = true;
    if (trace_) {
      for (const Triple& t : path) asserted = asserted && !trace_->inferred(t);
    }
    auto [it, fresh] = seen_.emplace(std::move(values), asserted);
    if (!fresh) it->second = it->second || asserted;
  }

  std::vector<Binding> bindings() const {
    std::vector<std::pair<std::vector<std::string>, Binding>> keyed;
    for (const auto& [values, asserted] : seen_) {
      std::vector<std::string> key;
      for (const Term& v : values) key.push_back(to_ntriples(v));
      keyed.push_back({std::move(key), Binding{values, !asserted}});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Binding> out;
    for (auto& [key, b] : keyed) out.push_back(std::move(b));
    return out;
  }

 private:
  const InferenceTrace* trace_;
  std::map<std::vector<Term>, bool> seen_;
};

const std::string_view kUses[] = {vocab::usesConcept, vocab::usesQualityCharacteristic};

std::vector<Triple> assessing(const Graph& g, std::string_view characteristic) {
  return g.match(std::nullopt, vocab::term(vocab::assesses), Term::iri(std::string(characteristic)));
}

}  // namespace

CQResult cq1(const Graph& closure, const InferenceTrace* trace) {
  CQResult r{CQ::cq1, {"dimension", "characteristic"}, {}, {}, {}};
  Collector c(trace);
  for (Dimension d : {Dimension::software_quality, Dimension::architectural_alignment,
                      Dimension::process_maturity}) {
    const Term cls = Term::iri(std::string(dimension_class(d)));
    r.groups.push_back(cls.value);
    for (const Triple& t : closure.match(std::nullopt, vocab::term(vocab::type), cls)) {
      c.add({cls, t.subject}, {t});
    }
  }
  r.bindings = c.bindings();
  return r;
}

CQResult cq2(const Graph& closure, std::string_view characteristic, const InferenceTrace* trace) {
  CQResult r{CQ::cq2, {"factor"}, {}, {}, {}};
  Collector c(trace);
  const Term target = Term::iri(std::string(characteristic));
  for (std::string_view p : kUses) {
    for (const Triple& t : closure.match(std::nullopt, vocab::term(p), target)) c.add({t.subject}, {t});
  }
  r.bindings = c.bindings();
  return r;
}

CQResult cq3(const Graph& closure, std::string_view factor, const InferenceTrace* trace) {
  CQResult r{CQ::cq3, {"characteristic"}, {}, {}, {}};
  Collector c(trace);
  const Term subject = Term::iri(std::string(factor));
  for (std::string_view p : kUses) {
    for (const Triple& t : closure.match(subject, vocab::term(p), std::nullopt)) c.add({t.object}, {t});
  }
  r.bindings = c.bindings();
  if (closure.match(subject, std::nullopt, std::nullopt).empty()) {
    r.note = "factor <" + std::string(factor) + "> not found";
  }
  return r;
}

CQResult cq4(const Graph& closure, std::string_view characteristic, const InferenceTrace* trace) {
  CQResult r{CQ::cq4, {"metric", "result"}, {}, {}, {}};
  Collector c(trace);
  for (const Triple& a : assessing(closure, characteristic)) {
    for (const Triple& m : closure.match(a.subject, vocab::term(vocab::hasMetric), std::nullopt)) {
      c.add({m.object, a.subject}, {a, m});
    }
  }
  r.bindings = c.bindings();
  return r;
}

CQResult cq5(const Graph& closure, std::string_view characteristic, const InferenceTrace* trace) {
  CQResult r{CQ::cq5, {"value", "result"}, {}, {}, {}};
  Collector c(trace);
  for (const Triple& a : assessing(closure, characteristic)) {
    for (const Triple& h : closure.match(a.subject, vocab::term(vocab::hasValue), std::nullopt)) {
      for (const Triple& v : closure.match(h.object, vocab::term(vocab::value), std::nullopt)) {
        if (v.object.is_literal()) c.add({v.object, a.subject}, {a, h, v});
      }
    }
  }
  r.bindings = c.bindings();
  return r;
}

CQResult answer(CQ id, const Graph& closure, std::string_view parameter, const InferenceTrace* trace) {
  switch (id) {
    case CQ::cq1: return cq1(closure, trace);
    case CQ::cq2: return cq2(closure, parameter, trace);
    case CQ::cq3: return cq3(closure, parameter, trace);
    case CQ::cq4: return cq4(closure, parameter, trace);
    case CQ::cq5: return cq5(closure, parameter, trace);
  }
  return {};
}

std::string render_text(const CQResult& result, const PrefixMap& prefixes) {
  std::string out = std::string(to_string(result.id)) + "\n";
  auto provenance = [](const Binding& b) { return std::string(b.inferred ? "inferred" : "asserted"); };

  if (!result.groups.empty()) {
    for (const auto& group : result.groups) {
      out += to_turtle(Term::iri(group), prefixes) + "\n";
      std::vector<std::pair<std::string, std::string>> members;
      std::size_t width = 0;
      for (const Binding& b : result.bindings) {
        if (b.values.front().value != group) continue;
        members.emplace_back(to_turtle(b.values[1], prefixes), provenance(b));
        width = std::max(width, members.back().first.size());
      }
      if (members.empty()) out += "  (none)\n";
      for (const auto& [name, how] : members) {
        out += "  " + name + std::string(width - name.size() + 2, ' ') + "(" + how + ")\n";
      }
    }
  } else {
    std::vector<std::string> header = result.columns;
    header.push_back("provenance");
    std::vector<std::vector<std::string>> rows;
    for (const Binding& b : result.bindings) {
      std::vector<std::string> row;
      for (const Term& v : b.values) row.push_back(to_turtle(v, prefixes));
      row.push_back(provenance(b));
      rows.push_back(std::move(row));
    }
    out += detail::render_table(header, rows);
  }
  if (!result.note.empty()) out += "note: " + result.note + "\n";
  return out;
}

std::string render_records(const CQResult& result) {
  std::string out;
  for (const Binding& b : result.bindings) {
    out += to_string(result.id);
    for (const Term& v : b.values) out += '\t' + to_ntriples(v);
    out += b.inferred ? "\tinferred\n" : "\tasserted\n";
  }
  return out;
}

}  // namespace squap

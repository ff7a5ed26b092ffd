#include <algorithm>
#include <set>

#include "squap/reasoner.hpp"
#include "squap/vocab.hpp"

namespace squap {

namespace {

std::string rule_id(const std::vector<int>& numbers, std::string_view unnumbered) {
  if (numbers.empty()) return std::string(unnumbered);
  std::string out;
  for (int n : numbers) out += (out.empty() ? "ax" : "/ax") + std::to_string(n);
  return out;
}

std::string local(std::string_view iri) {
  const auto cut = iri.find_last_of("/#");
  return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

std::vector<int> one(int n) { return n ? std::vector<int>{n} : std::vector<int>{}; }

// Subjects typed `cls` in the closure, in id order.
template <class F>
void for_each_instance(const Graph& g, std::string_view cls, F&& visit) {
  const auto type = g.lookup(vocab::term(vocab::type));
  const auto c = g.lookup(vocab::term(cls));
  if (!type || !c) return;
  g.for_each({std::nullopt, *type, *c}, [&](IdTriple t) { visit(t); });
}

}  // namespace

std::vector<Diagnostic> check_consistency(const Graph& closure, const AxiomSet& axioms, bool una) {
  std::vector<Diagnostic> out;

  for (const DisjointAxiom& d : axioms.disjoint) {
    const auto second = closure.lookup(vocab::term(d.second));
    if (!second) continue;
    for_each_instance(closure, d.first, [&](IdTriple t) {
      const IdTriple other{t.s, t.p, *second};
      if (!closure.contains(other)) return;
      const Triple a = closure.resolve(t);
      out.push_back({rule_id(d.numbers, "disjoint-with"), d.numbers, Severity::inconsistency,
                     {a, closure.resolve(other)},
                     to_ntriples(a.subject) + " is an instance of both " + local(d.first) +
                         " and " + local(d.second) + ", which are disjoint (" +
                         axiom_label(d.numbers) + ")"});
    });
  }

  if (una) {
    for (const ExactCardinalityAxiom& c : axioms.exact_cardinalities) {
      const auto property = closure.lookup(vocab::term(c.property));
      if (!property) continue;
      for_each_instance(closure, c.cls, [&](IdTriple t) {
        std::vector<Triple> links;
        closure.for_each({t.s, *property, std::nullopt},
                         [&](IdTriple l) { links.push_back(closure.resolve(l)); });
        if (links.size() < 2) return;
        out.push_back({rule_id(one(c.number), "exact-cardinality"), one(c.number),
                       Severity::constraint_violation, links,
                       to_ntriples(links.front().subject) + " is a " + local(c.cls) + " with " +
                           std::to_string(links.size()) + " distinct " + local(c.property) +
                           " values; exactly one is allowed (" + axiom_label(one(c.number)) +
                           ")"});
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagnostic> validate_strict(const Graph& closure, const AxiomSet& axioms) {
  std::vector<Diagnostic> out;
  auto has_any = [&](TermId subject, std::string_view property) {
    const auto p = closure.lookup(vocab::term(property));
    if (!p) return false;
    bool found = false;
    closure.for_each({subject, *p, std::nullopt}, [&](IdTriple) { found = true; });
    return found;
  };

  auto require = [&](const std::string& cls, const std::string& property, int number,
                     std::string_view what) {
    for_each_instance(closure, cls, [&](IdTriple t) {
      if (has_any(t.s, property)) return;
      const Triple typed = closure.resolve(t);
      out.push_back({rule_id(one(number), what), one(number), Severity::warning, {typed},
                     to_ntriples(typed.subject) + " is a " + local(cls) + " without any " +
                         local(property) + " (" + axiom_label(one(number)) + ")"});
    });
  };

  for (const ExistentialAxiom& e : axioms.existentials) {
    require(e.cls, e.property, e.number, "some-values-from");
  }
  for (const ExactCardinalityAxiom& c : axioms.exact_cardinalities) {
    require(c.cls, c.property, c.number, "exact-cardinality");
  }
  for (const CoveringAxiom& cov : axioms.coverings) {
    std::vector<TermId> parts;
    for (const auto& p : cov.parts) {
      if (auto id = closure.lookup(vocab::term(p))) parts.push_back(*id);
    }
    for_each_instance(closure, cov.cls, [&](IdTriple t) {
      const bool covered = std::any_of(parts.begin(), parts.end(), [&](TermId part) {
        return closure.contains(IdTriple{t.s, t.p, part});
      });
      if (covered) return;
      const Triple typed = closure.resolve(t);
      std::string names;
      for (const auto& p : cov.parts) names += (names.empty() ? "" : ", ") + local(p);
      out.push_back({rule_id(one(cov.number), "covering"), one(cov.number), Severity::warning,
                     {typed},
                     to_ntriples(typed.subject) + " is a " + local(cov.cls) +
                         " but none of " + names + " (" + axiom_label(one(cov.number)) + ")"});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace squap

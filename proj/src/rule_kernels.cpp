#include "rule_kernels.hpp"

#include "squap/vocab.hpp"

namespace squap::detail {

CompiledAxioms compile(const AxiomSet& axioms, Graph& closure) {
  auto id = [&](const std::string& iri) { return closure.intern(Term::iri(iri)); };
  CompiledAxioms c;
  c.type = id(std::string(vocab::type));
  for (std::size_t i = 0; i < axioms.subclasses.size(); ++i) {
    const auto& a = axioms.subclasses[i];
    c.supers[id(a.sub)].push_back({id(a.super), i});
  }
  for (std::size_t i = 0; i < axioms.universals.size(); ++i) {
    const auto& a = axioms.universals[i];
    const CompiledAxioms::Universal u{id(a.cls), id(a.property), id(a.filler), i};
    c.universals_by_class[u.cls].push_back(u);
    c.universals_by_property[u.property].push_back(u);
  }
  for (std::size_t i = 0; i < axioms.transitive.size(); ++i) {
    c.transitive.emplace(id(axioms.transitive[i].property), i);
  }
  for (std::size_t i = 0; i < axioms.chains.size(); ++i) {
    const auto& a = axioms.chains[i];
    const CompiledAxioms::Chain ch{id(a.first), id(a.second), id(a.result), i};
    c.chains_by_first[ch.first].push_back(ch);
    c.chains_by_second[ch.second].push_back(ch);
  }
  for (std::size_t i = 0; i < axioms.inverses.size(); ++i) {
    const TermId p = id(axioms.inverses[i].property);
    const TermId q = id(axioms.inverses[i].inverse);
    c.inverses[p].push_back({q, i});
    if (p != q) c.inverses[q].push_back({p, i});
  }
  for (std::size_t i = 0; i < axioms.subproperties.size(); ++i) {
    const auto& a = axioms.subproperties[i];
    c.superproperties[id(a.sub)].push_back({id(a.super), i});
  }
  return c;
}

void fire_rules(IdTriple t, const Graph& closure, const CompiledAxioms& ax,
                std::vector<Candidate>& out) {
  auto emit = [&](IdTriple conclusion, RuleKind rule, std::size_t axiom, IdTriple p1,
                  const IdTriple* p2) {
    if (closure.term(conclusion.s).is_literal()) return;
    if (closure.contains(conclusion)) return;
    Candidate c{conclusion, rule, axiom, {p1, p2 ? *p2 : IdTriple{}}, p2 ? 2u : 1u};
    out.push_back(c);
  };
  auto find = [](const auto& map, TermId key) -> decltype(&map.begin()->second) {
    auto it = map.find(key);
    return it == map.end() ? nullptr : &it->second;
  };

  if (t.p == ax.type) {
    if (auto* supers = find(ax.supers, t.o)) {
      for (const auto& sup : *supers) {
        emit({t.s, ax.type, sup.cls}, RuleKind::subclass, sup.axiom, t, nullptr);
      }
    }
    if (auto* us = find(ax.universals_by_class, t.o)) {
      for (const auto& u : *us) {
        closure.for_each({t.s, u.property, std::nullopt}, [&](IdTriple link) {
          emit({link.o, ax.type, u.filler}, RuleKind::universal, u.axiom, t, &link);
        });
      }
    }
  }

  if (auto* us = find(ax.universals_by_property, t.p)) {
    for (const auto& u : *us) {
      const IdTriple typed{t.s, ax.type, u.cls};
      if (closure.contains(typed)) {
        emit({t.o, ax.type, u.filler}, RuleKind::universal, u.axiom, typed, &t);
      }
    }
  }

  if (auto it = ax.transitive.find(t.p); it != ax.transitive.end()) {
    const std::size_t axiom = it->second;
    closure.for_each({t.o, t.p, std::nullopt}, [&](IdTriple next) {
      emit({t.s, t.p, next.o}, RuleKind::transitive, axiom, t, &next);
    });
    closure.for_each({std::nullopt, t.p, t.s}, [&](IdTriple prev) {
      emit({prev.s, t.p, t.o}, RuleKind::transitive, axiom, prev, &t);
    });
  }

  if (auto* chains = find(ax.chains_by_first, t.p)) {
    for (const auto& ch : *chains) {
      closure.for_each({t.o, ch.second, std::nullopt}, [&](IdTriple next) {
        emit({t.s, ch.result, next.o}, RuleKind::chain, ch.axiom, t, &next);
      });
    }
  }
  if (auto* chains = find(ax.chains_by_second, t.p)) {
    for (const auto& ch : *chains) {
      closure.for_each({std::nullopt, ch.first, t.s}, [&](IdTriple prev) {
        emit({prev.s, ch.result, t.o}, RuleKind::chain, ch.axiom, prev, &t);
      });
    }
  }

  if (auto* inv = find(ax.inverses, t.p)) {
    for (const auto& q : *inv) emit({t.o, q.property, t.s}, RuleKind::inverse, q.axiom, t, nullptr);
  }

  if (auto* supers = find(ax.superproperties, t.p)) {
    for (const auto& q : *supers) {
      emit({t.s, q.property, t.o}, RuleKind::subproperty, q.axiom, t, nullptr);
    }
  }
}

}  // namespace squap::detail

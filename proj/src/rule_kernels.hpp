#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "squap/axioms.hpp"
#include "squap/graph.hpp"
#include "squap/reasoner.hpp"

namespace squap::detail {

/// Axioms resolved to term ids of one closure graph and indexed by the
/// class or property that triggers them.
struct CompiledAxioms {
  struct Super {
    TermId cls;
    std::size_t axiom;
  };
  struct Universal {
    TermId cls;
    TermId property;
    TermId filler;
    std::size_t axiom;
  };
  struct Chain {
    TermId first;
    TermId second;
    TermId result;
    std::size_t axiom;
  };
  struct Linked {
    TermId property;
    std::size_t axiom;
  };

  TermId type = 0;
  std::unordered_map<TermId, std::vector<Super>> supers;
  std::unordered_map<TermId, std::vector<Universal>> universals_by_class;
  std::unordered_map<TermId, std::vector<Universal>> universals_by_property;
  std::unordered_map<TermId, std::size_t> transitive;
  std::unordered_map<TermId, std::vector<Chain>> chains_by_first;
  std::unordered_map<TermId, std::vector<Chain>> chains_by_second;
  std::unordered_map<TermId, std::vector<Linked>> inverses;
  std::unordered_map<TermId, std::vector<Linked>> superproperties;
};

/// Interns every IRI the axioms mention into `closure`'s dictionary.
CompiledAxioms compile(const AxiomSet& axioms, Graph& closure);

struct Candidate {
  IdTriple conclusion;
  RuleKind rule;
  std::size_t axiom;
  IdTriple premises[2];
  unsigned premise_count;
};

/// Fires every rule that has `t` as one of its premises, joining against
/// the current closure. Conclusions already in the closure are dropped.
void fire_rules(IdTriple t, const Graph& closure, const CompiledAxioms& axioms,
                std::vector<Candidate>& out);

/// One bucket per delta triple, in delta order.
using Buckets = std::vector<std::vector<Candidate>>;

Buckets expand_delta_serial(std::span<const IdTriple> delta, const Graph& closure,
                            const CompiledAxioms& axioms);
Buckets expand_delta_parallel(std::span<const IdTriple> delta, const Graph& closure,
                              const CompiledAxioms& axioms);

}  // namespace squap::detail

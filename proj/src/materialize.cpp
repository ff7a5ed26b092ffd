#include "rule_kernels.hpp"
#include "squap/reasoner.hpp"

namespace squap {

std::string_view to_string(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::subclass: return "subclass";
    case RuleKind::universal: return "all-values-from";
    case RuleKind::transitive: return "transitive";
    case RuleKind::chain: return "property-chain";
    case RuleKind::inverse: return "inverse";
    case RuleKind::subproperty: return "subproperty";
  }
  return "?";
}

const Derivation* InferenceTrace::find(const Triple& t) const {
  auto it = entries_.find(t);
  return it == entries_.end() ? nullptr : &it->second;
}

Materialization materialize(const Graph& graph, const AxiomSet& axioms,
                            MaterializeOptions options) {
  Materialization m;
  m.closure = graph;
  const detail::CompiledAxioms compiled = detail::compile(axioms, m.closure);

  const auto& asserted = m.closure.id_triples();
  std::vector<IdTriple> delta(asserted.begin(), asserted.end());
  std::vector<IdTriple> next;
  while (!delta.empty()) {
    ++m.rounds;
    const detail::Buckets buckets =
        options.execution == Execution::parallel
            ? detail::expand_delta_parallel(delta, m.closure, compiled)
            : detail::expand_delta_serial(delta, m.closure, compiled);
    next.clear();
    for (const auto& bucket : buckets) {
      for (const detail::Candidate& c : bucket) {
        if (!m.closure.insert(c.conclusion)) continue;
        next.push_back(c.conclusion);
        if (!options.record_trace) continue;
        Derivation why{c.rule, c.axiom, {}};
        for (unsigned i = 0; i < c.premise_count; ++i) {
          why.premises.push_back(m.closure.resolve(c.premises[i]));
        }
        m.trace.add(m.closure.resolve(c.conclusion), std::move(why));
      }
    }
    delta.swap(next);
  }
  return m;
}

}  // namespace squap

#include "rule_kernels.hpp"

namespace squap::detail {

// Reference kernel: the OpenMP kernel must produce identical buckets.
Buckets expand_delta_serial(std::span<const IdTriple> delta, const Graph& closure,
                            const CompiledAxioms& axioms) {
  Buckets buckets(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    fire_rules(delta[i], closure, axioms, buckets[i]);
  }
  return buckets;
}

}  // namespace squap::detail

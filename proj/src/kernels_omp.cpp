#include "rule_kernels.hpp"

namespace squap::detail {

// The closure is read-only during expansion; each iteration writes only its
// own bucket, so the merge order (and the result) matches the serial kernel.
Buckets expand_delta_parallel(std::span<const IdTriple> delta, const Graph& closure,
                              const CompiledAxioms& axioms) {
  Buckets buckets(delta.size());
  const auto n = static_cast<std::ptrdiff_t>(delta.size());
#pragma omp parallel for schedule(dynamic, 256) if (n > 1024)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    fire_rules(delta[static_cast<std::size_t>(i)], closure, axioms,
               buckets[static_cast<std::size_t>(i)]);
  }
  return buckets;
}

}  // namespace squap::detail

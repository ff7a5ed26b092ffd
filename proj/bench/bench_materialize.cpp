// Serial vs OpenMP delta expansion on synthetic SQuAP data: many factors,
// each using the root of a long `specializes` chain, with results assessing
// nodes along the chain. The transitive and chain rules dominate.
#include <benchmark/benchmark.h>

#include <string>

#include "squap/axioms.hpp"
#include "squap/reasoner.hpp"
#include "squap/vocab.hpp"

namespace {

using namespace squap;

Graph synthetic(int chains, int length) {
  const std::string ns = "http://example.org/bench/";
  auto node = [&](int c, int i) { return Term::iri(ns + "c" + std::to_string(c) + "-" + std::to_string(i)); };
  const Term type = vocab::term(vocab::type);
  Graph g;
  for (int c = 0; c < chains; ++c) {
    for (int i = 0; i + 1 < length; ++i) g.insert({node(c, i), vocab::term(vocab::specializes), node(c, i + 1)});
    for (int f = 0; f < 4; ++f) {
      const Term factor = Term::iri(ns + "f" + std::to_string(c) + "-" + std::to_string(f));
      g.insert({factor, type, vocab::term(vocab::SoftwareQualityFactor)});
      g.insert({factor, vocab::term(vocab::usesQualityCharacteristic), node(c, f)});
    }
    for (int r = 0; r < length; r += 8) {
      const Term result = Term::iri(ns + "r" + std::to_string(c) + "-" + std::to_string(r));
      g.insert({result, type, vocab::term(vocab::ProcessMaturityResult)});
      g.insert({result, vocab::term(vocab::assesses), node(c, r)});
    }
  }
  return g;
}

void run(benchmark::State& state, Execution execution) {
  const Graph g = synthetic(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const AxiomSet axioms = AxiomSet::squap();
  std::size_t size = 0;
  for (auto _ : state) {
    auto m = materialize(g, axioms, {execution, false});
    size = m.closure.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["asserted"] = static_cast<double>(g.size());
  state.counters["closure"] = static_cast<double>(size);
}

void BM_MaterializeSerial(benchmark::State& state) { run(state, Execution::serial); }
void BM_MaterializeParallel(benchmark::State& state) { run(state, Execution::parallel); }

#define SQUAP_SIZES ->Args({8, 64})->Args({16, 96})->Args({32, 96})->Unit(benchmark::kMillisecond)
BENCHMARK(BM_MaterializeSerial) SQUAP_SIZES;
BENCHMARK(BM_MaterializeParallel) SQUAP_SIZES;

}  // namespace

BENCHMARK_MAIN();

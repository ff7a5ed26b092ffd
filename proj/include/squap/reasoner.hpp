#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "squap/axioms.hpp"
#include "squap/graph.hpp"
#include "squap/prefix_map.hpp"

namespace squap {

enum class RuleKind { subclass, universal, transitive, chain, inverse, subproperty };

std::string_view to_string(RuleKind kind) noexcept;

/// Why an inferred triple holds: the rule, the axiom (index into the
/// AxiomSet vector for that rule kind) and the premises it fired on.
struct Derivation {
  RuleKind rule;
  std::size_t axiom = 0;
  std::vector<Triple> premises;
};

/// First derivation found for every inferred (non-asserted) triple.
class InferenceTrace {
 public:
  const Derivation* find(const Triple& t) const;
  bool inferred(const Triple& t) const { return find(t) != nullptr; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<Triple, Derivation>& entries() const noexcept { return entries_; }

  void add(Triple conclusion, Derivation why) { entries_.emplace(std::move(conclusion), std::move(why)); }

 private:
  std::map<Triple, Derivation> entries_;
};

enum class Execution { serial, parallel };

struct MaterializeOptions {
  Execution execution = Execution::parallel;
  bool record_trace = true;
};

struct Materialization {
  Graph closure;
  InferenceTrace trace;
  std::size_t rounds = 0;
};

/// Least fixpoint of the forward rules under `axioms`, computed
/// semi-naively: each round fires rules only for triples derived in the
/// previous round. No fresh terms are ever introduced; existentials and the
/// covering axiom are left to the validators.
Materialization materialize(const Graph& graph, const AxiomSet& axioms,
                            MaterializeOptions options = {});

enum class Severity { warning, constraint_violation, inconsistency };

std::string_view to_string(Severity s) noexcept;

struct Diagnostic {
  std::string rule;          // e.g. "ax12/ax15", "ax22"
  std::vector<int> axioms;   // numbered axioms behind the rule
  Severity severity = Severity::warning;
  std::vector<Triple> triples;
  std::string message;

  friend auto operator<=>(const Diagnostic&, const Diagnostic&) = default;
};

/// Disjointness clashes (inconsistency) and, with `una`, exact-cardinality
/// upper-bound breaches (constraint-violation). Empty means consistent.
std::vector<Diagnostic> check_consistency(const Graph& closure, const AxiomSet& axioms,
                                          bool una = true);

/// Closed-world audit: existential and cardinality lower bounds, and
/// characteristics covered by none of the subtypes. Warnings only.
std::vector<Diagnostic> validate_strict(const Graph& closure, const AxiomSet& axioms);

Severity max_severity(const std::vector<Diagnostic>& diagnostics, Severity floor = Severity::warning);
std::size_t count_at_least(const std::vector<Diagnostic>& diagnostics, Severity severity);

std::string render_text(const std::vector<Diagnostic>& diagnostics, const PrefixMap& prefixes);
/// Tab-separated: rule, severity, triples as N-Triples statements, message.
std::string render_records(const std::vector<Diagnostic>& diagnostics);

}  // namespace squap

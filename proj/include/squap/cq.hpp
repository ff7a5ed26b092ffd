#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squap/graph.hpp"
#include "squap/prefix_map.hpp"
#include "squap/reasoner.hpp"

namespace squap {

enum class CQ { cq1 = 1, cq2, cq3, cq4, cq5 };

std::string_view to_string(CQ id) noexcept;  // "CQ1" ...
/// Accepts "cq1".."cq5" in either case.
std::optional<CQ> parse_cq(std::string_view text) noexcept;
/// CQ1 takes no parameter; the others need an IRI.
bool needs_parameter(CQ id) noexcept;

struct Binding {
  std::vector<Term> values;  // one per column
  bool inferred = false;     // no supporting path is fully asserted

  friend auto operator<=>(const Binding&, const Binding&) = default;
};

struct CQResult {
  CQ id = CQ::cq1;
  std::vector<std::string> columns;
  std::vector<Binding> bindings;  // unique, ordered by column text
  /// CQ1 only: dimension class IRIs, rendered as groups even when empty.
  std::vector<std::string> groups;
  std::string note;
};

/// Every individual typed with a dimension class. Columns: dimension, characteristic.
CQResult cq1(const Graph& closure, const InferenceTrace* trace = nullptr);
/// Factors that use the characteristic. Column: factor.
CQResult cq2(const Graph& closure, std::string_view characteristic,
             const InferenceTrace* trace = nullptr);
/// Characteristics the factor uses. Column: characteristic.
CQResult cq3(const Graph& closure, std::string_view factor, const InferenceTrace* trace = nullptr);
/// Metrics of results assessing the characteristic. Columns: metric, result.
CQResult cq4(const Graph& closure, std::string_view characteristic,
             const InferenceTrace* trace = nullptr);
/// Literal values of results assessing the characteristic. Columns: value, result.
CQResult cq5(const Graph& closure, std::string_view characteristic,
             const InferenceTrace* trace = nullptr);

/// Dispatches on id; `parameter` is ignored for CQ1.
CQResult answer(CQ id, const Graph& closure, std::string_view parameter = {},
                const InferenceTrace* trace = nullptr);

std::string render_text(const CQResult& result, const PrefixMap& prefixes);
/// One binding per line: columns as N-Triples terms, then "asserted" or "inferred".
std::string render_records(const CQResult& result);

}  // namespace squap

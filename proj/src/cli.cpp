#include "squap/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "squap/axioms.hpp"
#include "squap/catalog.hpp"
#include "squap/cq.hpp"
#include "squap/error.hpp"
#include "squap/factor_engine.hpp"
#include "squap/model.hpp"
#include "squap/reasoner.hpp"
#include "squap/turtle.hpp"

namespace squap::cli {

namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string catalog;
  bool no_catalog = false;
  std::string mode = "any";
  bool una = true;
  bool strict = false;
  std::string base = std::string(vocab::kOccurrenceBase);
  std::string output;
  std::string format = "turtle";
  std::string cq;
  std::string param;
  std::string factor;
};

// Thrown for bad arguments discovered after CLI11 has accepted the command line.
struct UsageError : Error {
  using Error::Error;
};

// A ParseError with the file it came from.
struct FileParseError : Error {
  using Error::Error;
};

struct Loaded {
  Graph graph;
  PrefixMap prefixes;
  FactorCatalog catalog;
};

ParsedDocument parse_input(const std::string& path) {
  try {
    return parse_turtle_file(path);
  } catch (const ParseError& e) {
    throw FileParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                         ": " + std::string(to_string(e.kind())) + ": " + e.detail());
  }
}

// TBox, catalog and every input, with blank nodes relabelled per source so
// that `_:x` in two files stays two nodes.
Loaded load(const RunConfig& config) {
  Loaded l;
  l.prefixes = standard_prefixes();
  l.graph.insert_all(bundled_tbox(), "tbox-");

  if (!config.no_catalog) {
    std::string path = config.catalog;
    if (path.empty()) {
      if (const char* env = std::getenv("SQUAP_CATALOG"); env && *env) path = env;
    }
    const ParsedDocument doc = path.empty()
                                   ? parse_turtle(bundled_catalog_file().text)
                                   : parse_input(path);
    l.catalog = load_catalog(doc.graph);
    l.graph.insert_all(doc.graph, "catalog-");
    l.prefixes.merge(doc.prefixes);
  }

  for (std::size_t i = 0; i < config.inputs.size(); ++i) {
    const ParsedDocument doc = parse_input(config.inputs[i]);
    l.graph.insert_all(doc.graph, "in" + std::to_string(i + 1) + "-");
    l.prefixes.merge(doc.prefixes);
  }
  return l;
}

Materialization reason(const Graph& graph) {
  AxiomSet axioms = AxiomSet::squap();
  axioms.absorb(graph);
  return materialize(graph, axioms);
}

std::string expand_iri(const std::string& text, const PrefixMap& prefixes) {
  if (text.size() > 2 && text.front() == '<' && text.back() == '>') {
    return text.substr(1, text.size() - 2);
  }
  if (auto full = prefixes.expand(text)) return *full;
  if (is_absolute_iri(text) && text.find("://") != std::string::npos) return text;
  throw UsageError("cannot resolve '" + text + "' to an IRI (undeclared prefix?)");
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f.flush()) throw Error("cannot write " + path);
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  const Loaded l = load(config);
  AxiomSet axioms = AxiomSet::squap();
  axioms.absorb(l.graph);
  const Materialization m = materialize(l.graph, axioms);
  auto diagnostics = check_consistency(m.closure, axioms, config.una);
  if (config.strict) {
    auto warnings = validate_strict(m.closure, axioms);
    diagnostics.insert(diagnostics.end(), warnings.begin(), warnings.end());
  }
  const std::size_t failures = count_at_least(diagnostics, Severity::constraint_violation);
  if (config.format == "records") {
    out << render_records(diagnostics);
  } else {
    out << render_text(diagnostics, l.prefixes);
    out << m.closure.size() << " triples after materialization, " << diagnostics.size()
        << " diagnostics, " << failures << " at constraint-violation or above\n";
  }
  return failures ? validation_failure : ok;
}

int cmd_infer(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const EnableMode mode = *parse_enable_mode(config.mode);
  const Loaded l = load(config);
  const Materialization m = reason(l.graph);
  const OccurrenceMintingPolicy policy{config.base};
  const Graph occurrences = materialize_occurrences(m.closure, l.catalog, policy, mode);
  const auto enabled = enabled_factors(m.closure, l.catalog, mode);

  const bool records = config.format == "records";
  const std::string graph_text =
      records ? serialize_ntriples(occurrences) : serialize_turtle(occurrences, l.prefixes);
  const std::string summary = records ? render_records(enabled) : render_text(enabled, l.prefixes);
  if (!config.output.empty()) {
    write_file(config.output, graph_text);
    out << summary;
  } else {
    out << graph_text;
    err << summary;
  }
  return ok;
}

int cmd_query(const RunConfig& config, std::ostream& out) {
  const auto id = parse_cq(config.cq);
  if (!id) throw UsageError("unknown competency question '" + config.cq + "' (expected cq1..cq5)");
  if (needs_parameter(*id) && config.param.empty()) {
    throw UsageError(std::string(to_string(*id)) + " needs --param IRI");
  }
  const Loaded l = load(config);
  const std::string param = needs_parameter(*id) ? expand_iri(config.param, l.prefixes) : "";
  const Materialization m = reason(l.graph);
  const CQResult result = answer(*id, m.closure, param, &m.trace);
  out << (config.format == "records" ? render_records(result) : render_text(result, l.prefixes));
  return ok;
}

int cmd_export(const RunConfig& config, std::ostream& out) {
  const std::filesystem::path dir = config.output.empty() ? "." : config.output;
  std::filesystem::create_directories(dir);
  for (const BundledFile& f : bundled_files()) {
    const auto path = dir / std::string(f.name);
    write_file(path.string(), f.text);
    out << path.string() << '\n';
  }
  return ok;
}

int cmd_explain(const RunConfig& config, std::ostream& out) {
  const Loaded l = load(config);
  const std::string factor = expand_iri(config.factor, l.prefixes);
  const Materialization m = reason(l.graph);
  FactorReport report;
  try {
    report = explain(factor, m.closure, l.catalog);
  } catch (const NotFound& e) {
    throw UsageError(e.what());
  }
  out << (config.format == "records" ? render_records(report) : render_text(report, l.prefixes));
  return ok;
}

void add_graph_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("inputs", c.inputs, "Turtle data files, unioned")->check(CLI::ExistingFile);
  cmd.add_option("--catalog", c.catalog, "Factor catalog (default: bundled, or $SQUAP_CATALOG)");
  cmd.add_flag("--no-catalog", c.no_catalog, "Reason without any factor catalog");
  cmd.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"turtle", "records"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"SQuAP knowledge-graph engine", "squap"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check consistency of the unioned graph");
  add_graph_options(*validate, c);
  validate->add_flag("--una,!--no-una", c.una, "Unique name assumption for cardinality checks");
  validate->add_flag("--strict", c.strict, "Also report closed-world warnings");

  auto* infer = app.add_subcommand("infer", "Mint factor occurrences for enabled factors");
  add_graph_options(*infer, c);
  infer->add_option("--mode", c.mode, "any: some characteristic assessed; all: every one")
      ->check(CLI::IsMember({"any", "all"}));
  infer->add_option("--base", c.base, "Namespace for minted occurrence IRIs");
  infer->add_option("-o,--output", c.output, "Write the occurrence graph here");

  auto* query = app.add_subcommand("query", "Answer a competency question");
  query->add_option("cq", c.cq, "cq1 .. cq5")->required();
  add_graph_options(*query, c);
  query->add_option("--param", c.param, "Characteristic or factor IRI (prefixed names allowed)");

  auto* exporter = app.add_subcommand("export", "Write the bundled ontology and catalog");
  exporter->add_option("-o,--output", c.output, "Target directory (default: .)");

  auto* explainer = app.add_subcommand("explain", "Show the evidence behind a factor");
  explainer->add_option("factor", c.factor, "Factor IRI (prefixed names allowed)")->required();
  add_graph_options(*explainer, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (validate->parsed()) return cmd_validate(c, out);
    if (infer->parsed()) return cmd_infer(c, out, err);
    if (query->parsed()) return cmd_query(c, out);
    if (exporter->parsed()) return cmd_export(c, out);
    if (explainer->parsed()) return cmd_explain(c, out);
  } catch (const FileParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const CatalogError& e) {
    err << "catalog error: " << e.what() << '\n';
    return validation_failure;
  } catch (const MintingError& e) {
    err << "minting error: " << e.what() << '\n';
    return validation_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return parse_failure;
  }
  return usage_error;
}

}  // namespace squap::cli

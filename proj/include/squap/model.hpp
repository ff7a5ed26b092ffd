#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "squap/graph.hpp"
#include "squap/turtle.hpp"

namespace squap {

/// Raw text of the files compiled into the library.
struct BundledFile {
  std::string_view name;
  std::string_view text;
};

const BundledFile& bundled_tbox_file();
const BundledFile& bundled_catalog_file();
const BundledFile& bundled_alignments_file();
std::vector<BundledFile> bundled_files();

/// The SQuAP TBox graph (squap.ttl). Parsed once; returns a copy.
Graph bundled_tbox();
const ParsedDocument& bundled_tbox_document();

struct EntityFacets {
  bool as_class = false;
  bool as_individual = false;
  std::set<std::string> types;  // classes the IRI is an instance of

  bool punned() const noexcept { return as_class && as_individual; }
};

/// Per-IRI record of the class and individual readings an IRI is used
/// with. The two readings are tracked separately; nothing here merges
/// assertions about one reading into the other.
class EntityRegistry {
 public:
  const EntityFacets* find(std::string_view iri) const;
  bool is_class(std::string_view iri) const;
  bool is_individual(std::string_view iri) const;
  bool punned(std::string_view iri) const;
  const std::map<std::string, EntityFacets, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  friend EntityRegistry registry_of(const Graph& graph);
  std::map<std::string, EntityFacets, std::less<>> entries_;
};

/// Individual facet: subject of rdf:type (other than an OWL/RDFS
/// declaration type) or object of a domain property. Class facet: object of
/// rdf:type, declared owl:Class/rdfs:Class, or either side of a class axiom.
EntityRegistry registry_of(const Graph& graph);

enum class PatternRelation { reused_as_template, native_to };

struct PatternAnnotation {
  std::string pattern;
  PatternRelation relation;
  std::string entity;

  friend auto operator<=>(const PatternAnnotation&, const PatternAnnotation&) = default;
};

std::vector<PatternAnnotation> pattern_annotations(const Graph& graph);

}  // namespace squap

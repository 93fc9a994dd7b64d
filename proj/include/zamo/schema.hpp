#pragma once
// Schema view over a graph: class/property declarations, hierarchy,
// domains/ranges/inverses/disjointness, labels. Also ships the built-in
// ZAMO vocabulary files.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zamo/graph.hpp"
#include "zamo/turtle.hpp"

namespace zamo {

struct SchemaDiagnostic {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string subject;
  std::string message;
};

struct OntologySchema {
  std::set<std::string> classes;
  std::set<std::string> object_properties;
  std::set<std::string> data_properties;
  std::set<std::pair<std::string, std::string>> sub_class_edges;     // (sub, super)
  std::set<std::pair<std::string, std::string>> sub_property_edges;  // (sub, super)
  std::map<std::string, std::string> domain;  // property -> class
  std::map<std::string, std::string> range;   // property -> class or datatype
  std::map<std::string, std::string> inverse; // symmetric
  std::set<std::pair<std::string, std::string>> disjoint;  // ordered pairs, stored both ways? no: (min,max)
  std::map<std::string, std::string> labels;

  bool is_property(const std::string& iri) const {
    return object_properties.count(iri) || data_properties.count(iri);
  }
  bool is_disjoint(const std::string& a, const std::string& b) const {
    return disjoint.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) != 0;
  }
};

struct SchemaResult {
  OntologySchema schema;
  std::vector<SchemaDiagnostic> diagnostics;
  bool has_errors() const {
    for (const auto& d : diagnostics)
      if (d.severity == SchemaDiagnostic::Severity::Error) return true;
    return false;
  }
};

// Collects declarations and axioms; unknown schema vocabulary produces
// warnings, a class/property dual declaration is a SchemaConflict error.
SchemaResult extract_schema(const Graph& g);

// Reflexive-transitive reachability over sub_class_edges. Unknown IRIs are
// only equal to themselves. Terminates on cyclic hierarchies.
bool is_subclass_of(const OntologySchema& schema, const std::string& sub,
                    const std::string& super);
bool is_subproperty_of(const OntologySchema& schema, const std::string& sub,
                       const std::string& super);

// All superclasses of `sub` including itself.
std::set<std::string> superclasses_of(const OntologySchema& schema, const std::string& sub);

enum class VocabularyModule { Agents, Events, Sources };

std::string module_name(VocabularyModule m);
std::string module_namespace(VocabularyModule m);

// Location of the shipped data files (vocabulary, alignment, samod suites).
// Defaults to the repository's data/ directory; overridable for tests/CLI.
const std::string& data_dir();
void set_data_dir(std::string dir);

// Parses the shipped namespace file; throws std::runtime_error on I/O or
// parse failure (shipped data is CI-validated).
Graph builtin_vocabulary(VocabularyModule m);
// Controlled-vocabulary individuals (roles, attribute types, condition states).
Graph controlled_vocabulary();
// All three namespaces plus the controlled vocabulary, merged.
Graph full_vocabulary();

// Well-known prefixes for the ZAMO corpus (zamoa/zamoe/zamos, external
// alignment namespaces, rdf/rdfs/owl/xsd/skos).
PrefixMap zamo_prefixes();

std::string read_file(const std::string& path);

}  // namespace zamo

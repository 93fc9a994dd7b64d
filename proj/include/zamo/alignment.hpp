#pragma once
// SKOS punning alignment between ZAMO and external models: loading,
// validation, CSV export.

#include <optional>
#include <string>
#include <vector>

#include "zamo/graph.hpp"
#include "zamo/schema.hpp"

namespace zamo {

enum class MappingProperty { ExactMatch, CloseMatch, BroadMatch, NarrowMatch, RelatedMatch };

std::string mapping_property_name(MappingProperty p);  // canonical "skos:..." form

struct Mapping {
  std::string zamo_entity;  // full IRI, one of the three ZAMO namespaces
  MappingProperty property;
  std::string target;  // full IRI in one of the declared external namespaces
  VocabularyModule module;
  std::string as_written;  // predicate local name as found (e.g. "broaderMatch")
};

struct MappingDiagnostic {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string subject;
  std::string message;
};

struct AlignmentLoadResult {
  std::vector<Mapping> mappings;  // fixture statement order
  std::vector<MappingDiagnostic> diagnostics;
};

// Extracts mapping triples. "broaderMatch" (the paper's spelling) is accepted
// and canonicalized to broadMatch with a warning; a non-SKOS-mapping predicate
// on a ZAMO subject is an UnknownMappingProperty error.
AlignmentLoadResult load_mappings(const Graph& g);

struct MappingViolation {
  enum class Kind { UnknownEntity, MappingClash, MissingPunning, UnknownMappingProperty };
  Kind kind;
  std::string subject;
  std::string detail;
};

const char* mapping_violation_kind_name(MappingViolation::Kind k);

// (a) zamo entity missing from the shipped vocabulary schema, (b) exactMatch
// combined with broad/narrow/relatedMatch on the same (entity, target) pair,
// (c) missing skos:Concept punning triple in the alignment graph.
std::vector<MappingViolation> validate_mappings(const std::vector<Mapping>& mappings,
                                                const OntologySchema& vocabulary,
                                                const Graph& alignment_graph);

// CSV in fixture row order: local name, canonical skos property, prefixed
// target. Byte-deterministic.
std::string export_alignment_table(const std::vector<Mapping>& mappings, VocabularyModule module);

// Shipped alignment fixture for one module (data/alignment/<module>.ttl).
Graph alignment_fixture(VocabularyModule m);
// All three fixtures merged.
Graph full_alignment();

}  // namespace zamo

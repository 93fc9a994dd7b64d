#pragma once
// Forward-chaining saturation, instance validation, and the pitfall
// scanner backing the SAMOD model/data tests.

#include <string>
#include <vector>

#include "zamo/graph.hpp"
#include "zamo/schema.hpp"

namespace zamo {

struct RuleSet {
  bool type_via_subclass = false;
  bool propagate_subproperty = false;
  bool domain_typing = false;
  bool range_typing = false;
  bool inverse_completion = false;

  static RuleSet all() { return {true, true, true, true, true}; }
  static RuleSet none() { return {}; }
};

struct SaturationStats {
  std::size_t rounds = 0;
  std::size_t added = 0;
};

// Least fixpoint of the enabled rules over `data`. Input must be frozen;
// the result is returned frozen. Idempotent and monotone.
Graph saturate(const Graph& data, const OntologySchema& schema, const RuleSet& rules,
               SaturationStats* stats = nullptr);

struct Violation {
  enum class Kind {
    DisjointnessClash,
    LiteralAsObject,
    UndeclaredProperty,
    UndeclaredClass,
    DatatypeMismatch,
  };
  enum class Severity { Error, Warning };
  Kind kind;
  Severity severity;
  Term focus;
  std::string detail;
};

const char* violation_kind_name(Violation::Kind k);

// Checks the (normally saturated) instance graph against the schema.
// Clashes and datatype errors are error-severity; undeclared terms are
// warnings. Results are sorted by (kind, focus) for stable reports.
std::vector<Violation> validate_instances(const Graph& data, const OntologySchema& schema);

struct Pitfall {
  enum class Code { NoDomain, NoRange, NoLabel, OrphanClass, HierarchyCycle };
  Code code;
  std::string subject;
  std::string message;
};

const char* pitfall_code_name(Pitfall::Code c);
bool pitfall_is_error(Pitfall::Code c);  // only HierarchyCycle

// OOPS!-style scan over a schema; deterministic ordering by (code, subject).
std::vector<Pitfall> scan_pitfalls(const OntologySchema& schema);

}  // namespace zamo

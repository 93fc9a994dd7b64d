#pragma once
// SELECT-query subset: basic graph patterns with shared variables,
// comparison/boolean filters, DISTINCT, ORDER BY.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zamo/graph.hpp"
#include "zamo/turtle.hpp"

namespace zamo {

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

struct FilterExpr {
  enum class Kind { Comparison, And, Or, Not };
  enum class Op { Lt, Le, Eq, Ne, Ge, Gt };

  Kind kind = Kind::Comparison;
  Op op = Op::Eq;
  std::optional<std::variant<Variable, Term>> lhs;
  std::optional<std::variant<Variable, Term>> rhs;
  std::vector<FilterExpr> children;  // And/Or: 2, Not: 1
};

struct Query {
  std::vector<std::string> projection;
  bool distinct = false;
  std::vector<TriplePattern> bgp;
  std::vector<FilterExpr> filters;   // implicitly conjoined
  std::vector<std::string> order_by;
};

struct QueryParseResult {
  Query query;
  PrefixMap prefixes;
  std::vector<ParseDiagnostic> diagnostics;
  bool ok = false;
};

// `ambient` supplies prefixes usable on top of the query's own PREFIX lines.
QueryParseResult parse_query(const std::string& text, const PrefixMap& ambient = {});

struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<Term>>> rows;  // row length == header length
};

// All solution mappings of the BGP over g, filtered, projected,
// deduplicated under DISTINCT, ordered when requested. Pure and read-only.
ResultTable evaluate(const Query& q, const Graph& g);

// Human-oriented rendering: literals by lexical form, IRIs as prefixed
// names when possible. Used for expected-answer comparison.
std::string render_term_plain(const Term& t, const PrefixMap& prefixes);

// Report rendering: IRIs as prefixed names, literals quoted with their
// datatype suffix.
std::string render_term_csv(const Term& t, const PrefixMap& prefixes);
std::string table_to_csv(const ResultTable& table, const PrefixMap& prefixes);

}  // namespace zamo

#pragma once
// Turtle subset reader/writer. The grammar covers everything the shipped
// vocabulary, scenario and alignment files use: @prefix/@base, prefixed
// names, <IRI>s, the `a` keyword, ';' and ',' lists, string/numeric/boolean
// literals, ^^ datatypes, @ language tags, '#' comments, _:blank nodes.
// Collections, anonymous property lists and triple-quoted strings are out.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zamo/graph.hpp"

namespace zamo {

class PrefixMap {
 public:
  // Inserting an existing label rebinds it (last declaration wins).
  void bind(const std::string& label, const std::string& iri);
  std::optional<std::string> expand(const std::string& label) const;
  // Longest-namespace match; returns "prefix:local" or nullopt.
  std::optional<std::string> shrink(const std::string& iri) const;
  bool has(const std::string& label) const { return entries_.count(label) != 0; }

  const std::map<std::string, std::string>& entries() const { return entries_; }
  const std::optional<std::string>& base() const { return base_; }
  void set_base(std::string iri) { base_ = std::move(iri); }

 private:
  std::map<std::string, std::string> entries_;  // label -> namespace IRI, sorted
  std::optional<std::string> base_;
};

struct ParseDiagnostic {
  enum class Severity { Error, Warning };
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  Severity severity = Severity::Error;
};

struct TurtleResult {
  Graph graph;
  PrefixMap prefixes;
  std::vector<ParseDiagnostic> diagnostics;
  bool ok = false;
};

// Fail-fast: the first error aborts the parse.
TurtleResult parse_turtle(const std::string& text,
                          const std::optional<std::string>& base = std::nullopt);

// Deterministic: prefixes sorted by label, subjects by rendered form,
// `a` first and remaining predicates sorted, objects sorted. Output
// re-parses to a graph equal to the input.
std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes);

// Rendering helpers shared with query/report output.
std::string render_iri(const std::string& iri, const PrefixMap& prefixes);
std::string escape_turtle_string(const std::string& s);

}  // namespace zamo

#pragma once
// SAMOD verification workflow: per-iteration model/data/query tests and the
// cumulative regression run ("bag of test cases").

#include <map>
#include <string>
#include <vector>

#include "zamo/inference.hpp"
#include "zamo/query.hpp"
#include "zamo/schema.hpp"

namespace zamo {

// One rendered solution row: variable name -> rendered term. Unbound
// variables are simply absent.
using RenderedRow = std::map<std::string, std::string>;

struct CompetencyQuestion {
  std::vector<std::string> query_files;  // one or more SELECTs whose results are united
  std::string text;
  std::string expected_file;
  bool reason = true;  // evaluate on the saturated graph (default) or asserted data
  std::vector<Query> queries;
  std::vector<PrefixMap> query_prefixes;
  std::vector<RenderedRow> expected;
};

struct SuiteIteration {
  int id = 0;
  std::string title;
  std::string modelet_file;
  std::string dataset_file;
  Graph modelet;
  Graph dataset;
  std::vector<CompetencyQuestion> questions;
};

struct ScenarioSuite {
  std::string module;
  std::string directory;  // manifest directory; file references resolve against it
  std::vector<SuiteIteration> iterations;

  const SuiteIteration* find(int id) const;
};

// Loads and fully resolves a suite: parses modelets, datasets, queries and
// expected tables. Throws std::runtime_error on missing files, malformed
// manifests, or an expected column that no query projects.
ScenarioSuite load_suite(const std::string& manifest_path);

struct QueryTestOutcome {
  std::string text;
  std::vector<std::string> query_files;
  bool pass = false;
  std::vector<RenderedRow> expected;  // sorted
  std::vector<RenderedRow> actual;    // sorted
};

struct IterationReport {
  int id = 0;
  std::string title;
  // model test
  std::vector<Pitfall> pitfalls;
  std::vector<SchemaDiagnostic> schema_diagnostics;
  bool model_pass = false;
  // data test
  std::vector<Violation> violations;
  bool data_pass = false;
  // query test
  std::vector<QueryTestOutcome> query_outcomes;
  bool query_pass = false;

  bool pass() const { return model_pass && data_pass && query_pass; }
};

struct TestReport {
  std::string module;
  bool regression = false;
  std::vector<IterationReport> iterations;
  bool milestone = false;  // regression only: every test of every iteration passes
  int cq_total = 0;
  int cq_passed = 0;

  bool pass() const;
};

// Unites result tables: header is the union of headers in first-appearance
// order, missing cells are unbound.
ResultTable unite_tables(const std::vector<ResultTable>& tables);

// Single iteration against its own modelet.
IterationReport run_iteration(const ScenarioSuite& suite, int iteration_id);

// Iterations 1..k against the merged cumulative modelet; the milestone flag
// is set only when every test passes.
TestReport run_regression(const ScenarioSuite& suite, int up_to_iteration_id);

std::string report_to_text(const TestReport& report);
std::string report_to_json(const TestReport& report);

}  // namespace zamo

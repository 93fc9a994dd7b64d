// zamo: command-line front end for parsing, querying, reasoning,
// validation, alignment checks, and SAMOD suite runs.
//
// Exit codes: 0 success, 1 semantically valid run with failing checks,
// 2 usage or I/O error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zamo/alignment.hpp"
#include "zamo/inference.hpp"
#include "zamo/query.hpp"
#include "zamo/samod.hpp"
#include "zamo/schema.hpp"
#include "zamo/turtle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kChecksFailed = 1;
constexpr int kUsage = 2;

std::optional<zamo::VocabularyModule> module_from_name(const std::string& name) {
  if (name == "agents") return zamo::VocabularyModule::Agents;
  if (name == "events") return zamo::VocabularyModule::Events;
  if (name == "sources") return zamo::VocabularyModule::Sources;
  return std::nullopt;
}

// All three namespaces unless --schema restricts; controlled vocabulary is
// always included.
zamo::Graph load_schema_graph(const std::vector<std::string>& modules) {
  if (modules.empty()) return zamo::full_vocabulary();
  zamo::Graph g;
  for (const std::string& name : modules) {
    auto m = module_from_name(name);
    if (!m) throw std::runtime_error("unknown schema module: " + name);
    g = zamo::Graph::merged(g, zamo::builtin_vocabulary(*m));
  }
  return zamo::Graph::merged(g, zamo::controlled_vocabulary());
}

zamo::TurtleResult parse_file_or_fail(const std::string& path, int& exit_code) {
  zamo::TurtleResult r = zamo::parse_turtle(zamo::read_file(path));
  if (!r.ok) {
    for (const auto& d : r.diagnostics)
      std::cerr << path << ":" << d.line << ":" << d.column << ": "
                << (d.severity == zamo::ParseDiagnostic::Severity::Error ? "error" : "warning")
                << ": " << d.message << "\n";
    exit_code = kUsage;
  }
  return r;
}

int cmd_parse(const std::string& file) {
  int code = kOk;
  zamo::TurtleResult r = parse_file_or_fail(file, code);
  if (code != kOk) return code;
  std::cout << zamo::serialize_turtle(r.graph, r.prefixes);
  return kOk;
}

int cmd_query(const std::string& data_file, const std::string& query_file, bool reason,
              const std::vector<std::string>& schema_modules) {
  int code = kOk;
  zamo::TurtleResult data = parse_file_or_fail(data_file, code);
  if (code != kOk) return code;

  zamo::QueryParseResult qr = zamo::parse_query(zamo::read_file(query_file));
  if (!qr.ok) {
    for (const auto& d : qr.diagnostics)
      std::cerr << query_file << ":" << d.line << ":" << d.column << ": error: " << d.message
                << "\n";
    return kUsage;
  }

  zamo::Graph target = std::move(data.graph);
  if (reason) {
    zamo::Graph vocab = load_schema_graph(schema_modules);
    zamo::OntologySchema schema = zamo::extract_schema(vocab).schema;
    zamo::Graph merged = zamo::Graph::merged(vocab, target);
    merged.freeze();
    target = zamo::saturate(merged, schema, zamo::RuleSet::all());
  } else {
    target.freeze();
  }

  zamo::ResultTable table = zamo::evaluate(qr.query, target);
  zamo::PrefixMap render_prefixes = zamo::zamo_prefixes();
  for (const auto& [label, ns] : qr.prefixes.entries()) render_prefixes.bind(label, ns);
  std::cout << zamo::table_to_csv(table, render_prefixes);
  return kOk;
}

int cmd_validate(const std::string& data_file, const std::vector<std::string>& schema_modules) {
  int code = kOk;
  zamo::TurtleResult data = parse_file_or_fail(data_file, code);
  if (code != kOk) return code;

  zamo::Graph vocab = load_schema_graph(schema_modules);
  zamo::SchemaResult schema = zamo::extract_schema(vocab);
  zamo::Graph merged = zamo::Graph::merged(vocab, data.graph);
  merged.freeze();
  zamo::Graph saturated = zamo::saturate(merged, schema.schema, zamo::RuleSet::all());

  auto violations = zamo::validate_instances(saturated, schema.schema);
  bool errors = false;
  for (const auto& v : violations) {
    bool is_error = v.severity == zamo::Violation::Severity::Error;
    errors = errors || is_error;
    std::cout << (is_error ? "error" : "warning") << " " << zamo::violation_kind_name(v.kind)
              << " " << v.focus.value << ": " << v.detail << "\n";
  }
  std::cout << violations.size() << " violation(s), " << (errors ? "FAIL" : "PASS") << "\n";
  if (errors) std::cerr << "validation failed: error-severity violations present\n";
  return errors ? kChecksFailed : kOk;
}

int cmd_pitfalls(const std::vector<std::string>& schema_modules) {
  zamo::Graph vocab = load_schema_graph(schema_modules);
  zamo::SchemaResult schema = zamo::extract_schema(vocab);
  auto pitfalls = zamo::scan_pitfalls(schema.schema);
  zamo::PrefixMap prefixes = zamo::zamo_prefixes();
  bool errors = false;
  for (const auto& p : pitfalls) {
    bool is_error = zamo::pitfall_is_error(p.code);
    errors = errors || is_error;
    std::cout << (is_error ? "error" : "warning") << " " << zamo::pitfall_code_name(p.code) << " "
              << zamo::render_iri(p.subject, prefixes) << ": " << p.message << "\n";
  }
  std::cout << pitfalls.size() << " pitfall(s), " << (errors ? "FAIL" : "PASS") << "\n";
  if (errors) std::cerr << "pitfall scan failed: hierarchy cycle present\n";
  return errors ? kChecksFailed : kOk;
}

int cmd_align_export(const std::string& module_name) {
  auto m = module_from_name(module_name);
  if (!m) {
    std::cerr << "unknown alignment module: " << module_name << "\n";
    return kUsage;
  }
  zamo::AlignmentLoadResult loaded = zamo::load_mappings(zamo::alignment_fixture(*m));
  std::cout << zamo::export_alignment_table(loaded.mappings, *m);
  return kOk;
}

int cmd_align_validate(const std::optional<std::string>& file) {
  zamo::Graph alignment = file ? [&] {
    zamo::TurtleResult r = zamo::parse_turtle(zamo::read_file(*file));
    if (!r.ok) throw std::runtime_error("alignment file failed to parse: " + *file);
    return std::move(r.graph);
  }() : zamo::full_alignment();

  zamo::AlignmentLoadResult loaded = zamo::load_mappings(alignment);
  for (const auto& d : loaded.diagnostics) {
    if (d.severity == zamo::MappingDiagnostic::Severity::Warning)
      std::cerr << "warning: " << d.subject << ": " << d.message << "\n";
  }
  zamo::OntologySchema vocabulary = zamo::extract_schema(zamo::full_vocabulary()).schema;
  auto violations = zamo::validate_mappings(loaded.mappings, vocabulary, alignment);

  bool failed = false;
  for (const auto& d : loaded.diagnostics)
    if (d.severity == zamo::MappingDiagnostic::Severity::Error) {
      std::cout << "error UnknownMappingProperty " << d.subject << ": " << d.message << "\n";
      failed = true;
    }
  for (const auto& v : violations) {
    std::cout << "error " << zamo::mapping_violation_kind_name(v.kind) << " " << v.subject << ": "
              << v.detail << "\n";
    failed = true;
  }
  std::cout << (failed ? "FAIL" : "PASS") << " (" << loaded.mappings.size() << " mappings)\n";
  if (failed) std::cerr << "alignment validation failed\n";
  return failed ? kChecksFailed : kOk;
}

int cmd_samod(const std::string& manifest, std::optional<int> iteration, bool regression,
              const std::string& format) {
  zamo::ScenarioSuite suite = zamo::load_suite(manifest);

  zamo::TestReport report;
  if (regression) {
    int last = suite.iterations.back().id;
    report = zamo::run_regression(suite, iteration.value_or(last));
  } else {
    report.module = suite.module;
    report.regression = false;
    if (iteration) {
      report.iterations.push_back(zamo::run_iteration(suite, *iteration));
    } else {
      for (const auto& it : suite.iterations)
        report.iterations.push_back(zamo::run_iteration(suite, it.id));
    }
    for (const auto& it : report.iterations)
      for (const auto& q : it.query_outcomes) {
        ++report.cq_total;
        if (q.pass) ++report.cq_passed;
      }
  }

  std::cout << (format == "json" ? zamo::report_to_json(report) : zamo::report_to_text(report));
  bool ok = report.pass() && (!regression || report.milestone);
  if (!ok) std::cerr << "samod run failed\n";
  return ok ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZAMO knowledge-graph engine and SAMOD verification harness"};
  app.require_subcommand(1);
  std::string data_dir_override;
  app.add_option("--data", data_dir_override, "override the shipped data directory");

  // parse
  std::string parse_file;
  CLI::App* parse = app.add_subcommand("parse", "parse a Turtle file and echo it re-serialized");
  parse->add_option("file", parse_file, "Turtle input")->required();

  // query
  std::string query_data, query_file;
  bool query_reason = false;
  std::vector<std::string> query_schema;
  CLI::App* query = app.add_subcommand("query", "evaluate a SELECT query over a Turtle file");
  query->add_option("data", query_data, "Turtle data file")->required();
  query->add_option("query", query_file, "query file")->required();
  query->add_flag("--reason", query_reason, "saturate with the ZAMO schema before evaluating");
  query->add_option("--schema", query_schema, "restrict schema modules (agents|events|sources)");

  // validate
  std::string validate_data;
  std::vector<std::string> validate_schema;
  CLI::App* validate = app.add_subcommand("validate", "validate instance data against the schema");
  validate->add_option("data", validate_data, "Turtle data file")->required();
  validate->add_option("--schema", validate_schema,
                       "restrict schema modules (agents|events|sources)");

  // pitfalls
  std::vector<std::string> pitfall_schema;
  CLI::App* pitfalls = app.add_subcommand("pitfalls", "scan the shipped vocabulary for pitfalls");
  pitfalls->add_option("--schema", pitfall_schema,
                       "restrict schema modules (agents|events|sources)");

  // align
  CLI::App* align = app.add_subcommand("align", "alignment table operations");
  align->require_subcommand(1);
  std::string align_module;
  CLI::App* align_export = align->add_subcommand("export", "emit a module's alignment CSV");
  align_export->add_option("module", align_module, "agents|events|sources")->required();
  std::string align_file;
  CLI::App* align_validate = align->add_subcommand("validate", "validate alignment fixtures");
  align_validate->add_option("file", align_file, "alignment Turtle file (default: shipped)");

  // samod
  std::string samod_manifest;
  int samod_iteration = -1;
  bool samod_regression = false;
  std::string samod_format = "text";
  CLI::App* samod = app.add_subcommand("samod", "SAMOD test workflow");
  samod->require_subcommand(1);
  CLI::App* samod_run = samod->add_subcommand("run", "run a scenario suite");
  samod_run->add_option("manifest", samod_manifest, "suite manifest JSON")->required();
  samod_run->add_option("--iteration", samod_iteration, "run a single iteration");
  samod_run->add_flag("--regression", samod_regression,
                      "run the cumulative regression (bag of test cases)");
  samod_run->add_option("--report", samod_format, "report format (text|json)")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  if (!data_dir_override.empty()) zamo::set_data_dir(data_dir_override);

  try {
    if (*parse) return cmd_parse(parse_file);
    if (*query) return cmd_query(query_data, query_file, query_reason, query_schema);
    if (*validate) return cmd_validate(validate_data, validate_schema);
    if (*pitfalls) return cmd_pitfalls(pitfall_schema);
    if (*align_export) return cmd_align_export(align_module);
    if (*align_validate)
      return cmd_align_validate(align_file.empty() ? std::nullopt
                                                   : std::make_optional(align_file));
    if (*samod_run)
      return cmd_samod(samod_manifest,
                       samod_iteration < 0 ? std::nullopt : std::make_optional(samod_iteration),
                       samod_regression, samod_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

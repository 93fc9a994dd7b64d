#include "zamo/samod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zamo {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string parent_dir(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

Graph parse_required(const std::string& path) {
  TurtleResult r = parse_turtle(read_file(path));
  if (!r.ok) {
    const auto& d = r.diagnostics.front();
    throw std::runtime_error(path + ":" + std::to_string(d.line) + ":" +
                             std::to_string(d.column) + ": " + d.message);
  }
  return std::move(r.graph);
}

}  // namespace

const SuiteIteration* ScenarioSuite::find(int id) const {
  for (const SuiteIteration& it : iterations)
    if (it.id == id) return &it;
  return nullptr;
}

ScenarioSuite load_suite(const std::string& manifest_path) {
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed manifest " + manifest_path + ": " + e.what());
  }

  ScenarioSuite suite;
  suite.directory = parent_dir(manifest_path);
  if (!manifest.contains("module") || !manifest.contains("iterations"))
    throw std::runtime_error("manifest must declare \"module\" and \"iterations\"");
  suite.module = manifest["module"].get<std::string>();

  auto resolve = [&suite](const std::string& rel) { return suite.directory + "/" + rel; };

  for (const json& it_json : manifest["iterations"]) {
    SuiteIteration it;
    it.id = it_json.at("id").get<int>();
    it.title = it_json.value("title", "");
    it.modelet_file = it_json.at("modelet").get<std::string>();
    it.dataset_file = it_json.at("dataset").get<std::string>();
    it.modelet = parse_required(resolve(it.modelet_file));
    it.dataset = parse_required(resolve(it.dataset_file));

    for (const json& q_json : it_json.at("queries")) {
      CompetencyQuestion cq;
      cq.text = q_json.value("text", "");
      cq.reason = q_json.value("reason", true);
      const json& file = q_json.at("file");
      if (file.is_array())
        for (const json& f : file) cq.query_files.push_back(f.get<std::string>());
      else
        cq.query_files.push_back(file.get<std::string>());
      cq.expected_file = q_json.at("expected").get<std::string>();

      std::vector<std::string> projected;
      for (const std::string& qf : cq.query_files) {
        QueryParseResult qr = parse_query(read_file(resolve(qf)));
        if (!qr.ok) {
          const auto& d = qr.diagnostics.front();
          throw std::runtime_error(resolve(qf) + ":" + std::to_string(d.line) + ":" +
                                   std::to_string(d.column) + ": " + d.message);
        }
        for (const std::string& v : qr.query.projection)
          if (std::find(projected.begin(), projected.end(), v) == projected.end())
            projected.push_back(v);
        cq.queries.push_back(std::move(qr.query));
        cq.query_prefixes.push_back(std::move(qr.prefixes));
      }

      json expected;
      try {
        expected = json::parse(read_file(resolve(cq.expected_file)));
      } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed expected table " + resolve(cq.expected_file) + ": " +
                                 e.what());
      }
      if (!expected.is_array())
        throw std::runtime_error(resolve(cq.expected_file) + ": expected table must be an array");
      for (const json& row_json : expected) {
        RenderedRow row;
        for (auto& [key, value] : row_json.items()) {
          if (std::find(projected.begin(), projected.end(), key) == projected.end())
            throw std::runtime_error(resolve(cq.expected_file) + ": expected column \"" + key +
                                     "\" is not projected by any query of this question");
          row[key] = value.get<std::string>();
        }
        cq.expected.push_back(std::move(row));
      }
      it.questions.push_back(std::move(cq));
    }
    suite.iterations.push_back(std::move(it));
  }
  if (suite.iterations.empty()) throw std::runtime_error("manifest lists no iterations");
  return suite;
}

ResultTable unite_tables(const std::vector<ResultTable>& tables) {
  ResultTable out;
  for (const ResultTable& t : tables)
    for (const std::string& v : t.header)
      if (std::find(out.header.begin(), out.header.end(), v) == out.header.end())
        out.header.push_back(v);
  for (const ResultTable& t : tables) {
    for (const auto& row : t.rows) {
      std::vector<std::optional<Term>> united(out.header.size());
      for (std::size_t i = 0; i < t.header.size(); ++i) {
        auto pos = std::find(out.header.begin(), out.header.end(), t.header[i]);
        united[static_cast<std::size_t>(pos - out.header.begin())] = row[i];
      }
      out.rows.push_back(std::move(united));
    }
  }
  return out;
}

namespace {

std::vector<RenderedRow> render_rows(const ResultTable& table, const PrefixMap& prefixes) {
  std::vector<RenderedRow> out;
  for (const auto& row : table.rows) {
    RenderedRow r;
    for (std::size_t i = 0; i < table.header.size(); ++i)
      if (row[i]) r[table.header[i]] = render_term_plain(*row[i], prefixes);
    out.push_back(std::move(r));
  }
  return out;
}

IterationReport run_with_modelet(const SuiteIteration& iteration, const Graph& modelet_graph) {
  IterationReport report;
  report.id = iteration.id;
  report.title = iteration.title;

  // Model test: schema extraction plus pitfall scan over the modelet.
  SchemaResult extracted = extract_schema(modelet_graph);
  report.schema_diagnostics = extracted.diagnostics;
  report.pitfalls = scan_pitfalls(extracted.schema);
  bool pitfall_errors = false;
  for (const Pitfall& p : report.pitfalls)
    if (pitfall_is_error(p.code)) pitfall_errors = true;
  report.model_pass = !extracted.has_errors() && !pitfall_errors;

  // Data test: saturate the merged graph and validate instances.
  Graph merged = Graph::merged(modelet_graph, iteration.dataset);
  merged.freeze();
  Graph saturated = saturate(merged, extracted.schema, RuleSet::all());
  report.violations = validate_instances(saturated, extracted.schema);
  bool violation_errors = false;
  for (const Violation& v : report.violations)
    if (v.severity == Violation::Severity::Error) violation_errors = true;
  report.data_pass = !violation_errors;

  // Query test: evaluate every CQ and compare as unordered row multisets.
  report.query_pass = true;
  for (const CompetencyQuestion& cq : iteration.questions) {
    QueryTestOutcome outcome;
    outcome.text = cq.text;
    outcome.query_files = cq.query_files;

    const Graph& target = cq.reason ? saturated : merged;
    std::vector<ResultTable> tables;
    std::vector<RenderedRow> actual;
    for (std::size_t i = 0; i < cq.queries.size(); ++i) {
      ResultTable t = evaluate(cq.queries[i], target);
      for (auto& row : render_rows(t, cq.query_prefixes[i])) actual.push_back(std::move(row));
    }

    outcome.actual = std::move(actual);
    outcome.expected = cq.expected;
    std::sort(outcome.actual.begin(), outcome.actual.end());
    std::sort(outcome.expected.begin(), outcome.expected.end());
    outcome.pass = outcome.actual == outcome.expected;
    if (!outcome.pass) report.query_pass = false;
    report.query_outcomes.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace

bool TestReport::pass() const {
  for (const IterationReport& it : iterations)
    if (!it.pass()) return false;
  return !iterations.empty();
}

IterationReport run_iteration(const ScenarioSuite& suite, int iteration_id) {
  const SuiteIteration* it = suite.find(iteration_id);
  if (!it) throw std::runtime_error("no iteration with id " + std::to_string(iteration_id));
  return run_with_modelet(*it, it->modelet);
}

TestReport run_regression(const ScenarioSuite& suite, int up_to_iteration_id) {
  if (!suite.find(up_to_iteration_id))
    throw std::runtime_error("no iteration with id " + std::to_string(up_to_iteration_id));

  TestReport report;
  report.module = suite.module;
  report.regression = true;

  // Milestone model: modelets of iterations 1..k merged.
  Graph cumulative;
  for (const SuiteIteration& it : suite.iterations) {
    if (it.id > up_to_iteration_id) continue;
    cumulative = Graph::merged(cumulative, it.modelet);
  }

  for (const SuiteIteration& it : suite.iterations) {
    if (it.id > up_to_iteration_id) continue;
    report.iterations.push_back(run_with_modelet(it, cumulative));
  }

  for (const IterationReport& it : report.iterations) {
    for (const QueryTestOutcome& q : it.query_outcomes) {
      ++report.cq_total;
      if (q.pass) ++report.cq_passed;
    }
  }
  report.milestone = report.pass();
  return report;
}

namespace {

ordered_json rows_to_json(const std::vector<RenderedRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const RenderedRow& row : rows) {
    ordered_json obj = ordered_json::object();
    for (const auto& [k, v] : row) obj[k] = v;
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace

std::string report_to_text(const TestReport& report) {
  std::ostringstream out;
  out << "SAMOD suite: " << report.module
      << (report.regression ? " (regression, merged modelet)" : "") << "\n";
  for (const IterationReport& it : report.iterations) {
    out << "iteration " << it.id << (it.title.empty() ? "" : " - " + it.title) << "\n";

    int perrors = 0, pwarnings = 0;
    for (const Pitfall& p : it.pitfalls) (pitfall_is_error(p.code) ? perrors : pwarnings)++;
    int serrors = 0;
    for (const auto& d : it.schema_diagnostics)
      if (d.severity == SchemaDiagnostic::Severity::Error) ++serrors;
    out << "  model test: " << (it.model_pass ? "PASS" : "FAIL") << " (" << serrors + perrors
        << " errors, " << pwarnings << " warning pitfalls)\n";
    if (!it.model_pass) {
      for (const auto& d : it.schema_diagnostics)
        if (d.severity == SchemaDiagnostic::Severity::Error)
          out << "    schema: " << d.subject << ": " << d.message << "\n";
      for (const Pitfall& p : it.pitfalls)
        if (pitfall_is_error(p.code))
          out << "    pitfall " << pitfall_code_name(p.code) << ": " << p.subject << "\n";
    }

    int verrors = 0, vwarnings = 0;
    for (const Violation& v : it.violations)
      (v.severity == Violation::Severity::Error ? verrors : vwarnings)++;
    out << "  data test:  " << (it.data_pass ? "PASS" : "FAIL") << " (" << verrors << " errors, "
        << vwarnings << " warnings)\n";
    if (!it.data_pass) {
      for (const Violation& v : it.violations)
        if (v.severity == Violation::Severity::Error)
          out << "    " << violation_kind_name(v.kind) << ": " << v.focus.value << ": " << v.detail
              << "\n";
    }

    int qpass = 0;
    for (const QueryTestOutcome& q : it.query_outcomes) qpass += q.pass ? 1 : 0;
    out << "  query test: " << (it.query_pass ? "PASS" : "FAIL") << " (" << qpass << "/"
        << it.query_outcomes.size() << ")\n";
    for (const QueryTestOutcome& q : it.query_outcomes) {
      if (q.pass) continue;
      out << "    CQ failed: " << q.text << "\n";
      out << "      expected: " << rows_to_json(q.expected).dump() << "\n";
      out << "      actual:   " << rows_to_json(q.actual).dump() << "\n";
    }
  }
  int total = 0, passed = 0;
  for (const IterationReport& it : report.iterations)
    for (const QueryTestOutcome& q : it.query_outcomes) {
      ++total;
      passed += q.pass ? 1 : 0;
    }
  out << "CQs passed: " << passed << "/" << total << "\n";
  if (report.regression)
    out << "milestone: " << (report.milestone ? "reached" : "NOT reached") << "\n";
  out << "result: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string report_to_json(const TestReport& report) {
  ordered_json j;
  j["module"] = report.module;
  j["mode"] = report.regression ? "regression" : "iteration";
  ordered_json iterations = ordered_json::array();
  for (const IterationReport& it : report.iterations) {
    ordered_json ij;
    ij["id"] = it.id;
    ij["title"] = it.title;

    ordered_json model;
    model["pass"] = it.model_pass;
    ordered_json pitfalls = ordered_json::array();
    for (const Pitfall& p : it.pitfalls) {
      ordered_json pj;
      pj["code"] = pitfall_code_name(p.code);
      pj["subject"] = p.subject;
      pj["severity"] = pitfall_is_error(p.code) ? "error" : "warning";
      pitfalls.push_back(std::move(pj));
    }
    model["pitfalls"] = std::move(pitfalls);
    ordered_json sdiags = ordered_json::array();
    for (const auto& d : it.schema_diagnostics) {
      ordered_json dj;
      dj["severity"] = d.severity == SchemaDiagnostic::Severity::Error ? "error" : "warning";
      dj["subject"] = d.subject;
      dj["message"] = d.message;
      sdiags.push_back(std::move(dj));
    }
    model["diagnostics"] = std::move(sdiags);
    ij["model"] = std::move(model);

    ordered_json data;
    data["pass"] = it.data_pass;
    ordered_json violations = ordered_json::array();
    for (const Violation& v : it.violations) {
      ordered_json vj;
      vj["kind"] = violation_kind_name(v.kind);
      vj["severity"] = v.severity == Violation::Severity::Error ? "error" : "warning";
      vj["focus"] = v.focus.value;
      vj["detail"] = v.detail;
      violations.push_back(std::move(vj));
    }
    data["violations"] = std::move(violations);
    ij["data"] = std::move(data);

    ordered_json queries = ordered_json::array();
    for (const QueryTestOutcome& q : it.query_outcomes) {
      ordered_json qj;
      qj["text"] = q.text;
      qj["pass"] = q.pass;
      qj["expected"] = rows_to_json(q.expected);
      qj["actual"] = rows_to_json(q.actual);
      queries.push_back(std::move(qj));
    }
    ij["queries"] = std::move(queries);
    ij["pass"] = it.pass();
    iterations.push_back(std::move(ij));
  }
  j["iterations"] = std::move(iterations);
  j["cq_passed"] = report.cq_passed;
  j["cq_total"] = report.cq_total;
  if (report.regression) j["milestone"] = report.milestone;
  j["pass"] = report.pass();
  return j.dump(2) + "\n";
}

}  // namespace zamo

#include "zamo/schema.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef ZAMO_DATA_DIR
#define ZAMO_DATA_DIR "data"
#endif

namespace zamo {

namespace {

bool in_namespace(const std::string& iri, std::string_view ns) {
  return iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0;
}

bool is_schema_vocabulary_ns(const std::string& iri) {
  return in_namespace(iri, rdf::ns) || in_namespace(iri, rdfs::ns) || in_namespace(iri, owl::ns);
}

}  // namespace

SchemaResult extract_schema(const Graph& g) {
  SchemaResult result;
  OntologySchema& s = result.schema;
  auto warn = [&](const std::string& subject, const std::string& message) {
    result.diagnostics.push_back({SchemaDiagnostic::Severity::Warning, subject, message});
  };
  auto error = [&](const std::string& subject, const std::string& message) {
    result.diagnostics.push_back({SchemaDiagnostic::Severity::Error, subject, message});
  };

  for (const Triple& t : g.triples()) {
    const std::string& p = t.predicate.value;
    if (p == rdf::type) {
      if (!t.object.is_iri()) continue;
      const std::string& c = t.object.value;
      if (!t.subject.is_iri()) continue;
      const std::string& subj = t.subject.value;
      if (c == owl::owl_class || c == rdfs::rdfs_class)
        s.classes.insert(subj);
      else if (c == owl::object_property)
        s.object_properties.insert(subj);
      else if (c == owl::datatype_property)
        s.data_properties.insert(subj);
      else if (c == owl::annotation_property || c == owl::ontology ||
               c == owl::named_individual) {
        // recognized, nothing to record
      } else if (is_schema_vocabulary_ns(c)) {
        warn(subj, "unrecognized schema typing " + c);
      }
      // anything else is instance data
    } else if (p == rdfs::sub_class_of) {
      if (t.subject.is_iri() && t.object.is_iri())
        s.sub_class_edges.emplace(t.subject.value, t.object.value);
    } else if (p == rdfs::sub_property_of) {
      if (t.subject.is_iri() && t.object.is_iri())
        s.sub_property_edges.emplace(t.subject.value, t.object.value);
    } else if (p == rdfs::domain) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      auto [it, fresh] = s.domain.emplace(t.subject.value, t.object.value);
      if (!fresh && it->second != t.object.value)
        warn(t.subject.value, "conflicting rdfs:domain declarations; keeping " + it->second);
    } else if (p == rdfs::range) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      auto [it, fresh] = s.range.emplace(t.subject.value, t.object.value);
      if (!fresh && it->second != t.object.value)
        warn(t.subject.value, "conflicting rdfs:range declarations; keeping " + it->second);
    } else if (p == owl::inverse_of) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      s.inverse[t.subject.value] = t.object.value;
      s.inverse[t.object.value] = t.subject.value;
    } else if (p == owl::disjoint_with) {
      if (!t.subject.is_iri() || !t.object.is_iri()) continue;
      const std::string& a = t.subject.value;
      const std::string& b = t.object.value;
      s.disjoint.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    } else if (p == rdfs::label) {
      if (t.subject.is_iri() && t.object.is_literal())
        s.labels.emplace(t.subject.value, t.object.value);
    } else if (p == rdfs::comment || p == rdfs::see_also || p == owl::version_info ||
               p == owl::imports) {
      // annotations, ignored
    } else if (is_schema_vocabulary_ns(p)) {
      warn(t.subject.is_iri() ? t.subject.value : "",
           "unrecognized schema vocabulary predicate " + p);
    }
  }

  for (const std::string& c : s.classes)
    if (s.is_property(c)) error(c, "SchemaConflict: declared both class and property");

  return result;
}

namespace {

bool reachable(const std::set<std::pair<std::string, std::string>>& edges, const std::string& from,
               const std::string& to) {
  if (from == to) return true;
  std::set<std::string> seen{from};
  std::deque<std::string> todo{from};
  while (!todo.empty()) {
    std::string cur = todo.front();
    todo.pop_front();
    for (auto it = edges.lower_bound({cur, ""}); it != edges.end() && it->first == cur; ++it) {
      if (it->second == to) return true;
      if (seen.insert(it->second).second) todo.push_back(it->second);
    }
  }
  return false;
}

}  // namespace

bool is_subclass_of(const OntologySchema& schema, const std::string& sub,
                    const std::string& super) {
  return reachable(schema.sub_class_edges, sub, super);
}

bool is_subproperty_of(const OntologySchema& schema, const std::string& sub,
                       const std::string& super) {
  return reachable(schema.sub_property_edges, sub, super);
}

std::set<std::string> superclasses_of(const OntologySchema& schema, const std::string& sub) {
  std::set<std::string> seen{sub};
  std::deque<std::string> todo{sub};
  while (!todo.empty()) {
    std::string cur = todo.front();
    todo.pop_front();
    for (auto it = schema.sub_class_edges.lower_bound({cur, ""});
         it != schema.sub_class_edges.end() && it->first == cur; ++it)
      if (seen.insert(it->second).second) todo.push_back(it->second);
  }
  return seen;
}

std::string module_name(VocabularyModule m) {
  switch (m) {
    case VocabularyModule::Agents: return "agents";
    case VocabularyModule::Events: return "events";
    case VocabularyModule::Sources: return "sources";
  }
  return {};
}

std::string module_namespace(VocabularyModule m) {
  switch (m) {
    case VocabularyModule::Agents: return zamo_ns::agents;
    case VocabularyModule::Events: return zamo_ns::events;
    case VocabularyModule::Sources: return zamo_ns::sources;
  }
  return {};
}

namespace {
std::string g_data_dir = ZAMO_DATA_DIR;  // NOLINT
}

const std::string& data_dir() { return g_data_dir; }
void set_data_dir(std::string dir) { g_data_dir = std::move(dir); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

Graph parse_data_file(const std::string& relative) {
  std::string path = data_dir() + "/" + relative;
  TurtleResult r = parse_turtle(read_file(path));
  if (!r.ok) {
    std::string msg = "shipped data file failed to parse: " + path;
    if (!r.diagnostics.empty())
      msg += " (" + std::to_string(r.diagnostics.front().line) + ":" +
             std::to_string(r.diagnostics.front().column) + " " + r.diagnostics.front().message +
             ")";
    throw std::runtime_error(msg);
  }
  return std::move(r.graph);
}

}  // namespace

Graph builtin_vocabulary(VocabularyModule m) {
  return parse_data_file("vocabulary/" + module_name(m) + ".ttl");
}

Graph controlled_vocabulary() { return parse_data_file("vocabulary/controlled.ttl"); }

Graph full_vocabulary() {
  Graph g = Graph::merged(builtin_vocabulary(VocabularyModule::Agents),
                          builtin_vocabulary(VocabularyModule::Events));
  g = Graph::merged(g, builtin_vocabulary(VocabularyModule::Sources));
  g = Graph::merged(g, controlled_vocabulary());
  return g;
}

PrefixMap zamo_prefixes() {
  PrefixMap p;
  p.bind("zamoa", zamo_ns::agents);
  p.bind("zamoe", zamo_ns::events);
  p.bind("zamos", zamo_ns::sources);
  p.bind("rdf", std::string(rdf::ns));
  p.bind("rdfs", std::string(rdfs::ns));
  p.bind("owl", std::string(owl::ns));
  p.bind("xsd", std::string(xsd::ns));
  p.bind("skos", std::string(skos::ns));
  p.bind("crm", "http://www.cidoc-crm.org/cidoc-crm/");
  p.bind("arco-context", "https://w3id.org/arco/ontology/context-description/");
  p.bind("arco-archive", "https://w3id.org/arco/ontology/archive/");
  p.bind("org", "http://www.w3.org/ns/org#");
  p.bind("dul", "http://www.loa-cnr.it/ontologies/DUL.owl#");
  p.bind("fentry", "http://www.essepuntato.it/2014/03/fentry/");
  p.bind("hico", "http://purl.org/emmedi/hico/");
  p.bind("prov", "http://www.w3.org/ns/prov#");
  p.bind("fabio", "http://purl.org/spar/fabio/");
  p.bind("cito", "http://purl.org/spar/cito/");
  return p;
}

}  // namespace zamo

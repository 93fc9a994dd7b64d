#include "zamo/inference.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace zamo {

namespace {

// Direct successors in an edge set.
std::vector<std::string> successors(const std::set<std::pair<std::string, std::string>>& edges,
                                    const std::string& from) {
  std::vector<std::string> out;
  for (auto it = edges.lower_bound({from, ""}); it != edges.end() && it->first == from; ++it)
    out.push_back(it->second);
  return out;
}

}  // namespace

Graph saturate(const Graph& data, const OntologySchema& schema, const RuleSet& rules,
               SaturationStats* stats) {
  Graph out;
  for (const Triple& t : data.triples()) out.insert(t);

  const Term type_term = Term::iri(rdf::type);

  // Worklist of triples whose consequences are still unprocessed.
  std::deque<Triple> todo(out.triples().begin(), out.triples().end());
  std::size_t rounds = 0;
  std::size_t added = 0;

  auto derive = [&](Term s, Term p, Term o) {
    Triple t(std::move(s), std::move(p), std::move(o));
    if (out.insert(t)) {
      ++added;
      todo.push_back(std::move(t));
    }
  };

  while (!todo.empty()) {
    ++rounds;
    Triple t = std::move(todo.front());
    todo.pop_front();

    const bool is_type = t.predicate.value == rdf::type && t.object.is_iri();

    if (is_type && rules.type_via_subclass) {
      for (const std::string& super : successors(schema.sub_class_edges, t.object.value))
        derive(t.subject, type_term, Term::iri(super));
    }

    if (!is_type) {
      if (rules.propagate_subproperty) {
        for (const std::string& super : successors(schema.sub_property_edges, t.predicate.value))
          derive(t.subject, Term::iri(super), t.object);
      }
      if (rules.domain_typing) {
        auto dom = schema.domain.find(t.predicate.value);
        if (dom != schema.domain.end())
          derive(t.subject, type_term, Term::iri(dom->second));
      }
      if (rules.range_typing && !t.object.is_literal()) {
        auto rng = schema.range.find(t.predicate.value);
        if (rng != schema.range.end() && schema.classes.count(rng->second))
          derive(t.object, type_term, Term::iri(rng->second));
      }
      if (rules.inverse_completion && !t.object.is_literal()) {
        auto inv = schema.inverse.find(t.predicate.value);
        if (inv != schema.inverse.end())
          derive(t.object, Term::iri(inv->second), t.subject);
      }
    }
  }

  if (stats) {
    stats->rounds = rounds;
    stats->added = added;
  }
  out.freeze();
  return out;
}

const char* violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::DisjointnessClash: return "DisjointnessClash";
    case Violation::Kind::LiteralAsObject: return "LiteralAsObject";
    case Violation::Kind::UndeclaredProperty: return "UndeclaredProperty";
    case Violation::Kind::UndeclaredClass: return "UndeclaredClass";
    case Violation::Kind::DatatypeMismatch: return "DatatypeMismatch";
  }
  return "?";
}

namespace {

bool is_annotation_or_schema_predicate(const std::string& p) {
  return p == rdf::type || p == rdfs::label || p == rdfs::comment || p == rdfs::see_also ||
         p == rdfs::sub_class_of || p == rdfs::sub_property_of || p == rdfs::domain ||
         p == rdfs::range || p == owl::inverse_of || p == owl::disjoint_with ||
         p == owl::version_info || p == owl::imports;
}

bool is_skos_mapping_predicate(const std::string& p) {
  return p == skos::exact_match || p == skos::close_match || p == skos::broad_match ||
         p == skos::broader_match || p == skos::narrow_match || p == skos::related_match;
}

// Typings that come from the schema/alignment machinery itself.
bool is_schema_vocab_class(const std::string& c) {
  return c == owl::owl_class || c == rdfs::rdfs_class || c == owl::object_property ||
         c == owl::datatype_property || c == owl::annotation_property ||
         c == owl::named_individual || c == owl::ontology || c == skos::concept_iri;
}

}  // namespace

std::vector<Violation> validate_instances(const Graph& data, const OntologySchema& schema) {
  std::vector<Violation> out;

  // Types per subject, for the disjointness sweep.
  std::map<Term, std::set<std::string>> types;
  for (const Triple& t : data.triples()) {
    const std::string& p = t.predicate.value;
    if (p == rdf::type && t.object.is_iri()) {
      types[t.subject].insert(t.object.value);
      const std::string& c = t.object.value;
      bool declared = schema.classes.count(c) || is_schema_vocab_class(c);
      if (!declared)
        out.push_back({Violation::Kind::UndeclaredClass, Violation::Severity::Warning, t.subject,
                       "instance typed with undeclared class " + c});
      continue;
    }
    if (is_annotation_or_schema_predicate(p) || is_skos_mapping_predicate(p)) continue;
    if (!schema.is_property(p)) {
      out.push_back({Violation::Kind::UndeclaredProperty, Violation::Severity::Warning, t.subject,
                     "triple uses property absent from schema: " + p});
      continue;
    }
    if (schema.object_properties.count(p) && t.object.is_literal()) {
      out.push_back({Violation::Kind::LiteralAsObject, Violation::Severity::Error, t.subject,
                     "object property " + p + " used with literal \"" + t.object.value + "\""});
    }
    if (schema.data_properties.count(p)) {
      auto rng = schema.range.find(p);
      if (rng != schema.range.end() && t.object.is_literal() &&
          t.object.datatype != rng->second) {
        out.push_back({Violation::Kind::DatatypeMismatch, Violation::Severity::Error, t.subject,
                       "value \"" + t.object.value + "\"^^" + t.object.datatype +
                           " does not match declared range " + rng->second + " of " + p});
      }
    }
  }

  for (const auto& [subject, ts] : types) {
    for (auto a = ts.begin(); a != ts.end(); ++a) {
      for (auto b = std::next(a); b != ts.end(); ++b) {
        if (schema.is_disjoint(*a, *b))
          out.push_back({Violation::Kind::DisjointnessClash, Violation::Severity::Error, subject,
                         "typed with disjoint classes " + *a + " and " + *b});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.focus != b.focus) return a.focus < b.focus;
    return a.detail < b.detail;
  });
  return out;
}

const char* pitfall_code_name(Pitfall::Code c) {
  switch (c) {
    case Pitfall::Code::NoDomain: return "NoDomain";
    case Pitfall::Code::NoRange: return "NoRange";
    case Pitfall::Code::NoLabel: return "NoLabel";
    case Pitfall::Code::OrphanClass: return "OrphanClass";
    case Pitfall::Code::HierarchyCycle: return "HierarchyCycle";
  }
  return "?";
}

bool pitfall_is_error(Pitfall::Code c) { return c == Pitfall::Code::HierarchyCycle; }

std::vector<Pitfall> scan_pitfalls(const OntologySchema& schema) {
  std::vector<Pitfall> out;

  for (const std::string& p : schema.object_properties) {
    if (!schema.domain.count(p))
      out.push_back({Pitfall::Code::NoDomain, p, "object property has no rdfs:domain"});
    if (!schema.range.count(p))
      out.push_back({Pitfall::Code::NoRange, p, "object property has no rdfs:range"});
  }
  for (const std::string& p : schema.data_properties) {
    if (!schema.domain.count(p))
      out.push_back({Pitfall::Code::NoDomain, p, "data property has no rdfs:domain"});
    if (!schema.range.count(p))
      out.push_back({Pitfall::Code::NoRange, p, "data property has no rdfs:range"});
  }

  for (const std::string& c : schema.classes)
    if (!schema.labels.count(c))
      out.push_back({Pitfall::Code::NoLabel, c, "class has no rdfs:label"});
  for (const std::string& p : schema.object_properties)
    if (!schema.labels.count(p))
      out.push_back({Pitfall::Code::NoLabel, p, "property has no rdfs:label"});
  for (const std::string& p : schema.data_properties)
    if (!schema.labels.count(p))
      out.push_back({Pitfall::Code::NoLabel, p, "property has no rdfs:label"});

  // Orphans: no hierarchy edge and no domain/range use.
  std::set<std::string> used;
  for (const auto& [sub, super] : schema.sub_class_edges) {
    used.insert(sub);
    used.insert(super);
  }
  for (const auto& [p, c] : schema.domain) used.insert(c);
  for (const auto& [p, c] : schema.range) used.insert(c);
  for (const auto& [a, b] : schema.disjoint) {
    used.insert(a);
    used.insert(b);
  }
  for (const std::string& c : schema.classes)
    if (!used.count(c))
      out.push_back({Pitfall::Code::OrphanClass, c,
                     "class has no hierarchy edge and no domain/range use"});

  // Cycles: a class that can reach itself through at least one edge.
  for (const std::string& c : schema.classes) {
    for (const auto& super : schema.sub_class_edges) {
      if (super.first != c) continue;
      if (is_subclass_of(schema, super.second, c)) {
        out.push_back({Pitfall::Code::HierarchyCycle, c,
                       "class participates in a subclass cycle"});
        break;
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const Pitfall& a, const Pitfall& b) {
    if (a.code != b.code) return a.code < b.code;
    return a.subject < b.subject;
  });
  return out;
}

}  // namespace zamo

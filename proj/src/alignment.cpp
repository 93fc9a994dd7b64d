#include "zamo/alignment.hpp"

#include <map>
#include <set>
#include <sstream>

namespace zamo {

std::string mapping_property_name(MappingProperty p) {
  switch (p) {
    case MappingProperty::ExactMatch: return "skos:exactMatch";
    case MappingProperty::CloseMatch: return "skos:closeMatch";
    case MappingProperty::BroadMatch: return "skos:broadMatch";
    case MappingProperty::NarrowMatch: return "skos:narrowMatch";
    case MappingProperty::RelatedMatch: return "skos:relatedMatch";
  }
  return {};
}

namespace {

std::optional<VocabularyModule> module_of(const std::string& iri) {
  auto starts = [&iri](const std::string& ns) { return iri.rfind(ns, 0) == 0; };
  if (starts(zamo_ns::agents)) return VocabularyModule::Agents;
  if (starts(zamo_ns::events)) return VocabularyModule::Events;
  if (starts(zamo_ns::sources)) return VocabularyModule::Sources;
  return std::nullopt;
}

std::string local_name(const std::string& iri) {
  auto hash = iri.find_last_of("#/");
  return hash == std::string::npos ? iri : iri.substr(hash + 1);
}

}  // namespace

AlignmentLoadResult load_mappings(const Graph& g) {
  AlignmentLoadResult result;
  for (const Triple& t : g.triples()) {
    const std::string& p = t.predicate.value;
    bool skos_ns = p.rfind(std::string(skos::ns), 0) == 0;
    if (!skos_ns) continue;
    if (p == rdf::type) continue;

    std::optional<MappingProperty> prop;
    std::string as_written = local_name(p);
    if (p == skos::exact_match) prop = MappingProperty::ExactMatch;
    else if (p == skos::close_match) prop = MappingProperty::CloseMatch;
    else if (p == skos::broad_match) prop = MappingProperty::BroadMatch;
    else if (p == skos::narrow_match) prop = MappingProperty::NarrowMatch;
    else if (p == skos::related_match) prop = MappingProperty::RelatedMatch;
    else if (p == skos::broader_match) {
      // The appendix writes skos:broaderMatch; SKOS defines broadMatch.
      prop = MappingProperty::BroadMatch;
      result.diagnostics.push_back({MappingDiagnostic::Severity::Warning, t.subject.value,
                                    "skos:broaderMatch canonicalized to skos:broadMatch"});
    } else {
      result.diagnostics.push_back({MappingDiagnostic::Severity::Error, t.subject.value,
                                    "UnknownMappingProperty: " + p});
      continue;
    }

    if (!t.subject.is_iri() || !t.object.is_iri()) {
      result.diagnostics.push_back({MappingDiagnostic::Severity::Error, t.subject.value,
                                    "mapping statement terms must be IRIs"});
      continue;
    }
    auto module = module_of(t.subject.value);
    if (!module) {
      result.diagnostics.push_back(
          {MappingDiagnostic::Severity::Error, t.subject.value,
           "mapping subject is not in a ZAMO namespace: " + t.subject.value});
      continue;
    }
    result.mappings.push_back({t.subject.value, *prop, t.object.value, *module, as_written});
  }
  return result;
}

const char* mapping_violation_kind_name(MappingViolation::Kind k) {
  switch (k) {
    case MappingViolation::Kind::UnknownEntity: return "UnknownEntity";
    case MappingViolation::Kind::MappingClash: return "MappingClash";
    case MappingViolation::Kind::MissingPunning: return "MissingPunning";
    case MappingViolation::Kind::UnknownMappingProperty: return "UnknownMappingProperty";
  }
  return "?";
}

std::vector<MappingViolation> validate_mappings(const std::vector<Mapping>& mappings,
                                                const OntologySchema& vocabulary,
                                                const Graph& alignment_graph) {
  std::vector<MappingViolation> out;
  const Term concept_term = Term::iri(skos::concept_iri);
  const Term type = Term::iri(rdf::type);

  std::map<std::pair<std::string, std::string>, std::set<MappingProperty>> by_pair;
  std::set<std::string> punning_checked;

  for (const Mapping& m : mappings) {
    if (!vocabulary.classes.count(m.zamo_entity) && !vocabulary.is_property(m.zamo_entity))
      out.push_back({MappingViolation::Kind::UnknownEntity, m.zamo_entity,
                     "mapped entity is absent from the shipped vocabulary"});
    by_pair[{m.zamo_entity, m.target}].insert(m.property);

    if (punning_checked.insert(m.zamo_entity).second) {
      if (alignment_graph.match(Term::iri(m.zamo_entity), type, concept_term).empty())
        out.push_back({MappingViolation::Kind::MissingPunning, m.zamo_entity,
                       "mapped entity lacks the skos:Concept punning triple"});
    }
  }

  for (const auto& [pair, props] : by_pair) {
    if (!props.count(MappingProperty::ExactMatch)) continue;
    for (MappingProperty p : props) {
      if (p == MappingProperty::BroadMatch || p == MappingProperty::NarrowMatch ||
          p == MappingProperty::RelatedMatch) {
        out.push_back({MappingViolation::Kind::MappingClash, pair.first,
                       "exactMatch combined with " + mapping_property_name(p) + " for target " +
                           pair.second});
      }
    }
  }
  return out;
}

std::string export_alignment_table(const std::vector<Mapping>& mappings,
                                   VocabularyModule module) {
  PrefixMap prefixes = zamo_prefixes();
  std::ostringstream out;
  out << "Zamo URI,Skos Property,Aligned URI\n";
  for (const Mapping& m : mappings) {
    if (m.module != module) continue;
    std::string target = prefixes.shrink(m.target).value_or(m.target);
    out << local_name(m.zamo_entity) << "," << mapping_property_name(m.property) << "," << target
        << "\n";
  }
  return out.str();
}

Graph alignment_fixture(VocabularyModule m) {
  std::string path = data_dir() + "/alignment/" + module_name(m) + ".ttl";
  TurtleResult r = parse_turtle(read_file(path));
  if (!r.ok) throw std::runtime_error("shipped alignment fixture failed to parse: " + path);
  return std::move(r.graph);
}

Graph full_alignment() {
  Graph g = Graph::merged(alignment_fixture(VocabularyModule::Agents),
                          alignment_fixture(VocabularyModule::Events));
  return Graph::merged(g, alignment_fixture(VocabularyModule::Sources));
}

}  // namespace zamo

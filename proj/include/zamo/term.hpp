#pragma once
// RDF terms: IRIs, blank nodes, and typed literals.
//
// Literals keep their lexical form verbatim; values are only interpreted
// where a datatype demands it (filters, well-formedness checks).

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zamo {

namespace xsd {
inline constexpr std::string_view ns = "http://www.w3.org/2001/XMLSchema#";
inline const std::string string_type = "http://www.w3.org/2001/XMLSchema#string";
inline const std::string integer_type = "http://www.w3.org/2001/XMLSchema#integer";
inline const std::string decimal_type = "http://www.w3.org/2001/XMLSchema#decimal";
inline const std::string boolean_type = "http://www.w3.org/2001/XMLSchema#boolean";
inline const std::string date_type = "http://www.w3.org/2001/XMLSchema#date";
inline const std::string gyear_type = "http://www.w3.org/2001/XMLSchema#gYear";
}  // namespace xsd

namespace rdf {
inline constexpr std::string_view ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string lang_string_type =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view ns = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string label = "http://www.w3.org/2000/01/rdf-schema#label";
inline const std::string comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline const std::string sub_class_of = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline const std::string sub_property_of = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline const std::string domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline const std::string range = "http://www.w3.org/2000/01/rdf-schema#range";
inline const std::string rdfs_class = "http://www.w3.org/2000/01/rdf-schema#Class";
inline const std::string see_also = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
}  // namespace rdfs

namespace owl {
inline constexpr std::string_view ns = "http://www.w3.org/2002/07/owl#";
inline const std::string owl_class = "http://www.w3.org/2002/07/owl#Class";
inline const std::string object_property = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline const std::string datatype_property = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline const std::string annotation_property = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline const std::string named_individual = "http://www.w3.org/2002/07/owl#NamedIndividual";
inline const std::string inverse_of = "http://www.w3.org/2002/07/owl#inverseOf";
inline const std::string disjoint_with = "http://www.w3.org/2002/07/owl#disjointWith";
inline const std::string ontology = "http://www.w3.org/2002/07/owl#Ontology";
inline const std::string version_info = "http://www.w3.org/2002/07/owl#versionInfo";
inline const std::string imports = "http://www.w3.org/2002/07/owl#imports";
}  // namespace owl

namespace skos {
inline constexpr std::string_view ns = "http://www.w3.org/2004/02/skos/core#";
inline const std::string concept_iri = "http://www.w3.org/2004/02/skos/core#Concept";
inline const std::string exact_match = "http://www.w3.org/2004/02/skos/core#exactMatch";
inline const std::string close_match = "http://www.w3.org/2004/02/skos/core#closeMatch";
inline const std::string broad_match = "http://www.w3.org/2004/02/skos/core#broadMatch";
inline const std::string broader_match = "http://www.w3.org/2004/02/skos/core#broaderMatch";
inline const std::string narrow_match = "http://www.w3.org/2004/02/skos/core#narrowMatch";
inline const std::string related_match = "http://www.w3.org/2004/02/skos/core#relatedMatch";
}  // namespace skos

namespace zamo_ns {
inline const std::string agents = "https://w3id.org/zeri/ontology/zamo/agents#";
inline const std::string events = "https://w3id.org/zeri/ontology/zamo/events#";
inline const std::string sources = "https://w3id.org/zeri/ontology/zamo/sources#";
}  // namespace zamo_ns

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

struct LiteralError : std::runtime_error {
  enum class Kind { IllFormedLiteral, LangWithoutLangString, UnsupportedDatatype };
  Kind kind;
  LiteralError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// Value type for IRIs, blank nodes and literals. For non-literals only
// `value` is meaningful; literals use value as the lexical form.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string value;     // IRI string, blank label, or lexical form
  std::string datatype;  // literals only
  std::string lang;      // language-string literals only

  static Term iri(std::string v) { return Term{TermKind::Iri, std::move(v), {}, {}}; }
  static Term blank(std::string label) {
    return Term{TermKind::BlankNode, std::move(label), {}, {}};
  }
  // Unchecked literal constructor; make_literal validates lexical forms.
  static Term literal(std::string lexical, std::string dt, std::string language = {}) {
    return Term{TermKind::Literal, std::move(lexical), std::move(dt), std::move(language)};
  }
  static Term string_literal(std::string lexical) {
    return literal(std::move(lexical), xsd::string_type);
  }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    std::size_t h = std::hash<std::string>{}(t.value);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(t.kind));
    mix(std::hash<std::string>{}(t.datatype));
    mix(std::hash<std::string>{}(t.lang));
    return h;
  }
};

bool is_supported_datatype(const std::string& datatype);

// Checks the lexical form against the datatype grammar. Throws LiteralError.
Term make_literal(const std::string& lexical, const std::string& datatype,
                  const std::optional<std::string>& lang = std::nullopt);

// True if the IRI string contains a scheme (absolute reference).
bool is_absolute_iri(std::string_view iri);

}  // namespace zamo

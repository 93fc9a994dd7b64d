#include "zamo/term.hpp"

#include <cctype>

namespace zamo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view strip_sign(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return s;
}

bool valid_integer(std::string_view s) { return all_digits(strip_sign(s)); }

bool valid_decimal(std::string_view s) {
  s = strip_sign(s);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  auto head = s.substr(0, dot);
  auto tail = s.substr(dot + 1);
  if (head.empty() && tail.empty()) return false;
  return (head.empty() || all_digits(head)) && (tail.empty() || all_digits(tail));
}

bool valid_gyear(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return s.size() >= 4 && all_digits(s);
}

bool valid_date(std::string_view s) {
  // YYYY-MM-DD with basic calendar sanity.
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) || !all_digits(s.substr(8, 2)))
    return false;
  int month = (s[5] - '0') * 10 + (s[6] - '0');
  int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

}  // namespace

bool is_supported_datatype(const std::string& datatype) {
  return datatype == xsd::string_type || datatype == rdf::lang_string_type ||
         datatype == xsd::integer_type || datatype == xsd::decimal_type ||
         datatype == xsd::boolean_type || datatype == xsd::date_type ||
         datatype == xsd::gyear_type;
}

bool is_absolute_iri(std::string_view iri) {
  // scheme ":" — scheme starts with a letter, then letters/digits/+/-/.
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri.front()))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
      return false;
  }
  return false;
}

Term make_literal(const std::string& lexical, const std::string& datatype,
                  const std::optional<std::string>& lang) {
  if (!is_supported_datatype(datatype))
    throw LiteralError(LiteralError::Kind::UnsupportedDatatype,
                       "unsupported literal datatype: " + datatype);
  if (lang.has_value() && datatype != rdf::lang_string_type)
    throw LiteralError(LiteralError::Kind::LangWithoutLangString,
                       "language tag given with non-language datatype " + datatype);
  if (datatype == rdf::lang_string_type && (!lang.has_value() || lang->empty()))
    throw LiteralError(LiteralError::Kind::IllFormedLiteral,
                       "language-string literal without a language tag");

  bool ok = true;
  if (datatype == xsd::integer_type)
    ok = valid_integer(lexical);
  else if (datatype == xsd::decimal_type)
    ok = valid_decimal(lexical);
  else if (datatype == xsd::boolean_type)
    ok = lexical == "true" || lexical == "false";
  else if (datatype == xsd::date_type)
    ok = valid_date(lexical);
  else if (datatype == xsd::gyear_type)
    ok = valid_gyear(lexical);
  if (!ok)
    throw LiteralError(LiteralError::Kind::IllFormedLiteral,
                       "lexical form \"" + lexical + "\" does not match datatype " + datatype);

  return Term::literal(lexical, datatype, lang.value_or(""));
}

}  // namespace zamo

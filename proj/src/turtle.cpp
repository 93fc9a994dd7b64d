#include "zamo/turtle.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace zamo {

void PrefixMap::bind(const std::string& label, const std::string& iri) { entries_[label] = iri; }

std::optional<std::string> PrefixMap::expand(const std::string& label) const {
  auto it = entries_.find(label);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> PrefixMap::shrink(const std::string& iri) const {
  const std::string* best_ns = nullptr;
  const std::string* best_label = nullptr;
  for (const auto& [label, ns] : entries_) {
    if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
      if (!best_ns || ns.size() > best_ns->size()) {
        best_ns = &ns;
        best_label = &label;
      }
    }
  }
  if (!best_ns) return std::nullopt;
  std::string local = iri.substr(best_ns->size());
  // The local part must survive re-parsing as a prefixed name.
  if (local.empty()) return std::nullopt;
  for (std::size_t i = 0; i < local.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(local[i]);
    bool ok = std::isalnum(c) || c == '_' || c == '-' || c >= 0x80 ||
              (c == '.' && i != 0 && i + 1 != local.size());
    if (!ok) return std::nullopt;
  }
  return *best_label + ":" + local;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  bool eof() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    return c;
  }
};

struct ParseError {
  int line;
  int column;
  std::string message;
};

class TurtleParser {
 public:
  TurtleParser(const std::string& text, const std::optional<std::string>& base)
      : cur_{text} {
    if (base) prefixes_.set_base(*base);
  }

  TurtleResult run() {
    TurtleResult result;
    try {
      while (true) {
        skip_ws();
        if (cur_.eof()) break;
        if (cur_.peek() == '@') {
          directive();
        } else {
          triples();
        }
      }
      result.ok = true;
    } catch (const ParseError& e) {
      result.diagnostics.push_back(
          {e.line, e.column, e.message, ParseDiagnostic::Severity::Error});
      result.ok = false;
    }
    result.graph = std::move(graph_);
    result.prefixes = std::move(prefixes_);
    for (auto& w : warnings_) result.diagnostics.push_back(std::move(w));
    return result;
  }

 private:
  Cursor cur_;
  PrefixMap prefixes_;
  Graph graph_;
  std::vector<ParseDiagnostic> warnings_;

  [[noreturn]] void fail(const std::string& message) { throw ParseError{cur_.line, cur_.column, message}; }
  [[noreturn]] void fail_at(int line, int column, const std::string& message) {
    throw ParseError{line, column, message};
  }

  void skip_ws() {
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (c == '#') {
        while (!cur_.eof() && cur_.peek() != '\n') cur_.advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        cur_.advance();
      } else {
        break;
      }
    }
  }

  void expect(char c, const std::string& what) {
    if (cur_.eof() || cur_.peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    cur_.advance();
  }

  void directive() {
    int line = cur_.line, col = cur_.column;
    std::string word;
    cur_.advance();  // '@'
    while (!cur_.eof() && std::isalpha(static_cast<unsigned char>(cur_.peek())))
      word.push_back(cur_.advance());
    if (word == "prefix") {
      skip_ws();
      std::string label = prefix_label();
      skip_ws();
      std::string iri = iri_ref();
      if (!is_absolute_iri(iri)) fail_at(line, col, "prefix namespace IRI is not absolute: " + iri);
      prefixes_.bind(label, iri);
      skip_ws();
      expect('.', "after @prefix directive");
    } else if (word == "base") {
      skip_ws();
      std::string iri = iri_ref();
      if (!is_absolute_iri(iri)) fail_at(line, col, "base IRI is not absolute: " + iri);
      prefixes_.set_base(iri);
      skip_ws();
      expect('.', "after @base directive");
    } else {
      fail_at(line, col, "unknown directive '@" + word + "'");
    }
  }

  // Reads "label:" of a @prefix directive; label may be empty.
  std::string prefix_label() {
    std::string label;
    while (!cur_.eof() && is_pn_chars(cur_.peek()) ) label.push_back(cur_.advance());
    expect(':', "after prefix label");
    return label;
  }

  static bool is_pn_chars_base(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80;
  }
  static bool is_pn_chars(char c) {
    return is_pn_chars_base(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-';
  }

  std::string iri_ref() {
    expect('<', "to open an IRI");
    std::string out;
    while (true) {
      if (cur_.eof()) fail("unterminated IRI (missing '>')");
      char c = cur_.advance();
      if (c == '>') break;
      if (c == ' ' || c == '\n' || c == '\t' || c == '<' || c == '"')
        fail("invalid character inside IRI");
      out.push_back(c);
    }
    if (is_absolute_iri(out)) return out;
    if (prefixes_.base()) return *prefixes_.base() + out;
    fail("relative IRI with no base: <" + out + ">");
  }

  // PN_LOCAL: letters, digits, '_', '-', and interior dots. A trailing dot
  // belongs to the statement terminator, not the name.
  std::string local_name() {
    std::string out;
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (is_pn_chars(c)) {
        out.push_back(cur_.advance());
      } else if (c == '.' && is_pn_chars(cur_.peek(1))) {
        out.push_back(cur_.advance());
      } else {
        break;
      }
    }
    return out;
  }

  Term prefixed_name_or_keyword(bool allow_keyword_a) {
    int line = cur_.line, col = cur_.column;
    std::string head;
    while (!cur_.eof() && (is_pn_chars(cur_.peek()) ||
                           (cur_.peek() == '.' && is_pn_chars(cur_.peek(1)))))
      head.push_back(cur_.advance());
    if (cur_.eof() || cur_.peek() != ':') {
      if (allow_keyword_a && head == "a") return Term::iri(rdf::type);
      if (head == "true" || head == "false")
        return Term::literal(head, xsd::boolean_type);
      fail_at(line, col, head.empty() ? "expected a term" : "undeclared name '" + head + "'");
    }
    cur_.advance();  // ':'
    std::string local = local_name();
    auto ns = prefixes_.expand(head);
    if (!ns) {
      // The paper's own snippets use ':name' without declaring the empty
      // prefix; resolve it against the base when one is available.
      if (head.empty() && prefixes_.base()) {
        ns = *prefixes_.base();
      } else {
        fail_at(line, col, "undeclared prefix '" + head + ":'");
      }
    }
    return Term::iri(*ns + local);
  }

  Term string_literal() {
    int line = cur_.line, col = cur_.column;
    expect('"', "to open a string");
    std::string out;
    while (true) {
      if (cur_.eof()) fail_at(line, col, "unterminated string literal");
      char c = cur_.advance();
      if (c == '"') break;
      if (c == '\n') fail_at(line, col, "newline inside single-line string literal");
      if (c == '\\') {
        if (cur_.eof()) fail("dangling escape at end of input");
        char e = cur_.advance();
        switch (e) {
          case 't': out.push_back('\t'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'u': out += unicode_escape(4); break;
          case 'U': out += unicode_escape(8); break;
          default: fail("unknown escape '\\" + std::string(1, e) + "'");
        }
      } else {
        out.push_back(c);
      }
    }
    // Suffix: @lang or ^^datatype, else plain string.
    if (!cur_.eof() && cur_.peek() == '@') {
      cur_.advance();
      std::string lang;
      while (!cur_.eof() && (std::isalnum(static_cast<unsigned char>(cur_.peek())) || cur_.peek() == '-'))
        lang.push_back(cur_.advance());
      if (lang.empty()) fail("empty language tag");
      return Term::literal(out, rdf::lang_string_type, lang);
    }
    if (!cur_.eof() && cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.advance();
      cur_.advance();
      int dline = cur_.line, dcol = cur_.column;
      Term dt = cur_.peek() == '<' ? Term::iri(iri_ref()) : prefixed_name_or_keyword(false);
      try {
        return make_literal(out, dt.value);
      } catch (const LiteralError& e) {
        fail_at(dline, dcol, e.what());
      }
    }
    return Term::literal(out, xsd::string_type);
  }

  std::string unicode_escape(int digits) {
    unsigned long code = 0;
    for (int i = 0; i < digits; ++i) {
      if (cur_.eof() || !std::isxdigit(static_cast<unsigned char>(cur_.peek())))
        fail("bad unicode escape");
      char c = cur_.advance();
      code = code * 16 + (std::isdigit(static_cast<unsigned char>(c))
                              ? c - '0'
                              : std::tolower(c) - 'a' + 10);
    }
    // Encode as UTF-8.
    std::string out;
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
    return out;
  }

  Term numeric_literal() {
    std::string out;
    if (cur_.peek() == '+' || cur_.peek() == '-') out.push_back(cur_.advance());
    bool has_dot = false;
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(cur_.advance());
      } else if (c == '.' && !has_dot && std::isdigit(static_cast<unsigned char>(cur_.peek(1)))) {
        has_dot = true;
        out.push_back(cur_.advance());
      } else {
        break;
      }
    }
    if (!cur_.eof() && (is_pn_chars(cur_.peek())))
      fail("malformed numeric literal");
    return Term::literal(out, has_dot ? xsd::decimal_type : xsd::integer_type);
  }

  Term blank_node() {
    cur_.advance();  // '_'
    expect(':', "after '_' in blank node");
    std::string label = local_name();
    if (label.empty()) fail("empty blank node label");
    return Term::blank(label);
  }

  Term subject_term() {
    char c = cur_.peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && cur_.peek(1) == ':') return blank_node();
    if (c == '"') fail("a literal cannot be a triple subject");
    if (c == '[') fail("anonymous blank node property lists are not supported");
    if (c == '(') fail("RDF collections are not supported");
    return prefixed_name_or_keyword(false);
  }

  Term predicate_term() {
    char c = cur_.peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '"') fail("a literal cannot be a predicate");
    if (c == '_') fail("a blank node cannot be a predicate");
    Term t = prefixed_name_or_keyword(true);
    if (t.is_literal()) fail("a literal cannot be a predicate");
    return t;
  }

  Term object_term() {
    char c = cur_.peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && cur_.peek(1) == ':') return blank_node();
    if (c == '"') return string_literal();
    if (c == '\'') fail("single-quoted strings are not supported");
    if (c == '[') fail("anonymous blank node property lists are not supported");
    if (c == '(') fail("RDF collections are not supported");
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(cur_.peek(1)))))
      return numeric_literal();
    return prefixed_name_or_keyword(false);
  }

  void triples() {
    Term subject = subject_term();
    while (true) {
      skip_ws();
      if (cur_.eof()) fail("unexpected end of input inside statement");
      Term predicate = predicate_term();
      while (true) {
        skip_ws();
        if (cur_.eof()) fail("unexpected end of input, expected an object");
        Term object = object_term();
        graph_.insert(Triple(subject, predicate, object));
        skip_ws();
        if (!cur_.eof() && cur_.peek() == ',') {
          cur_.advance();
          continue;
        }
        break;
      }
      if (cur_.eof()) fail("unexpected end of input, expected ';' or '.'");
      char c = cur_.peek();
      if (c == ';') {
        cur_.advance();
        skip_ws();
        // Tolerate a trailing ';' before the terminating dot.
        if (!cur_.eof() && cur_.peek() == '.') {
          cur_.advance();
          return;
        }
        continue;
      }
      if (c == '.') {
        cur_.advance();
        return;
      }
      fail("expected ';', ',' or '.' after object");
    }
  }
};

}  // namespace

TurtleResult parse_turtle(const std::string& text, const std::optional<std::string>& base) {
  return TurtleParser(text, base).run();
}

std::string escape_turtle_string(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string render_iri(const std::string& iri, const PrefixMap& prefixes) {
  if (auto short_form = prefixes.shrink(iri)) return *short_form;
  return "<" + iri + ">";
}

namespace {

std::string render_term_ttl(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind) {
    case TermKind::Iri:
      return render_iri(t.value, prefixes);
    case TermKind::BlankNode:
      return "_:" + t.value;
    case TermKind::Literal: {
      std::string out = "\"" + escape_turtle_string(t.value) + "\"";
      if (t.datatype == rdf::lang_string_type) return out + "@" + t.lang;
      if (t.datatype == xsd::string_type) return out;
      return out + "^^" + render_iri(t.datatype, prefixes);
    }
  }
  return {};
}

}  // namespace

std::string serialize_turtle(const Graph& graph, const PrefixMap& prefixes) {
  std::ostringstream out;
  for (const auto& [label, ns] : prefixes.entries())
    out << "@prefix " << label << ": <" << ns << "> .\n";
  if (!prefixes.entries().empty() && graph.size() > 0) out << "\n";

  // Group by subject, keyed by rendered form so output is independent of
  // insertion order.
  std::map<std::string, Term> subjects;
  for (const Triple& t : graph.triples())
    subjects.emplace(render_term_ttl(t.subject, prefixes), t.subject);

  bool first_block = true;
  for (const auto& [subject_str, subject] : subjects) {
    // rdf:type first (as `a`), everything else sorted by rendered form.
    std::map<std::string, std::set<std::string>> po;
    for (const Triple& t : graph.match(subject, std::nullopt, std::nullopt)) {
      std::string pred =
          t.predicate.value == rdf::type ? "a" : render_term_ttl(t.predicate, prefixes);
      po[pred].insert(render_term_ttl(t.object, prefixes));
    }
    std::vector<std::string> preds;
    if (po.count("a")) preds.push_back("a");
    for (const auto& [pred, objects] : po)
      if (pred != "a") preds.push_back(pred);

    if (!first_block) out << "\n";
    first_block = false;
    out << subject_str;
    for (std::size_t i = 0; i < preds.size(); ++i) {
      out << (i == 0 ? " " : " ;\n    ") << preds[i] << " ";
      bool first_obj = true;
      for (const auto& obj_str : po[preds[i]]) {
        if (!first_obj) out << ", ";
        first_obj = false;
        out << obj_str;
      }
    }
    out << " .\n";
  }
  return out.str();
}

}  // namespace zamo

#include "zamo/query.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace zamo {

namespace {

struct QCursor {
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

struct QParseError {
  int line;
  int column;
  std::string message;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class QueryParser {
 public:
  QueryParser(const std::string& text, const PrefixMap& ambient) : cur_{text} {
    for (const auto& [label, ns] : ambient.entries()) prefixes_.bind(label, ns);
  }

  QueryParseResult run() {
    QueryParseResult result;
    try {
      prologue();
      select();
      skip_ws();
      if (!cur_.eof()) fail("trailing content after query");
      check_variable_scopes();
      result.ok = true;
    } catch (const QParseError& e) {
      result.diagnostics.push_back(
          {e.line, e.column, e.message, ParseDiagnostic::Severity::Error});
    }
    result.query = std::move(query_);
    result.prefixes = std::move(prefixes_);
    return result;
  }

 private:
  QCursor cur_;
  PrefixMap prefixes_;
  Query query_;

  [[noreturn]] void fail(const std::string& m) { throw QParseError{cur_.line, cur_.column, m}; }

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

  std::string word() {
    std::string out;
    while (!cur_.eof() && is_name_char(cur_.peek())) out.push_back(cur_.advance());
    return out;
  }

  static std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
  }

  bool at_keyword(const std::string& kw) {
    std::size_t save = cur_.pos;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char c = cur_.peek(i);
      if (std::toupper(static_cast<unsigned char>(c)) != kw[i]) return false;
    }
    char after = cur_.peek(kw.size());
    (void)save;
    return !is_name_char(after);
  }

  void eat_keyword(const std::string& kw) {
    if (!at_keyword(kw)) fail("expected keyword " + kw);
    for (std::size_t i = 0; i < kw.size(); ++i) cur_.advance();
  }

  void expect(char c, const std::string& what) {
    if (cur_.eof() || cur_.peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    cur_.advance();
  }

  void prologue() {
    while (true) {
      skip_ws();
      if (!at_keyword("PREFIX")) break;
      eat_keyword("PREFIX");
      skip_ws();
      std::string label = word();
      expect(':', "after prefix label");
      skip_ws();
      std::string iri = iri_ref();
      if (!is_absolute_iri(iri)) fail("prefix namespace IRI is not absolute: " + iri);
      prefixes_.bind(label, iri);
    }
  }

  std::string iri_ref() {
    expect('<', "to open an IRI");
    std::string out;
    while (true) {
      if (cur_.eof()) fail("unterminated IRI");
      char c = cur_.advance();
      if (c == '>') break;
      if (c == ' ' || c == '\n') fail("invalid character inside IRI");
      out.push_back(c);
    }
    return out;
  }

  Variable variable() {
    expect('?', "to start a variable");
    std::string name = word();
    if (name.empty()) fail("empty variable name");
    return Variable{name};
  }

  Term prefixed_name(bool allow_a) {
    int line = cur_.line, col = cur_.column;
    std::string head;
    while (!cur_.eof() &&
           (is_name_char(cur_.peek()) || (cur_.peek() == '.' && is_name_char(cur_.peek(1)))))
      head.push_back(cur_.advance());
    if (cur_.eof() || cur_.peek() != ':') {
      if (allow_a && head == "a") return Term::iri(rdf::type);
      if (head == "true" || head == "false") return Term::literal(head, xsd::boolean_type);
      throw QParseError{line, col,
                        head.empty() ? "expected a term" : "undeclared name '" + head + "'"};
    }
    cur_.advance();
    std::string local;
    while (!cur_.eof() &&
           (is_name_char(cur_.peek()) || (cur_.peek() == '.' && is_name_char(cur_.peek(1)))))
      local.push_back(cur_.advance());
    auto ns = prefixes_.expand(head);
    if (!ns) throw QParseError{line, col, "undeclared prefix '" + head + ":'"};
    return Term::iri(*ns + local);
  }

  Term literal_term() {
    expect('"', "to open a string");
    std::string out;
    while (true) {
      if (cur_.eof()) fail("unterminated string literal");
      char c = cur_.advance();
      if (c == '"') break;
      if (c == '\\') {
        if (cur_.eof()) fail("dangling escape");
        char e = cur_.advance();
        switch (e) {
          case 't': out.push_back('\t'); break;
          case 'n': out.push_back('\n'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default: fail("unknown escape in string");
        }
      } else {
        out.push_back(c);
      }
    }
    if (!cur_.eof() && cur_.peek() == '@') {
      cur_.advance();
      std::string lang;
      while (!cur_.eof() &&
             (std::isalnum(static_cast<unsigned char>(cur_.peek())) || cur_.peek() == '-'))
        lang.push_back(cur_.advance());
      if (lang.empty()) fail("empty language tag");
      return Term::literal(out, rdf::lang_string_type, lang);
    }
    if (!cur_.eof() && cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.advance();
      cur_.advance();
      Term dt = cur_.peek() == '<' ? Term::iri(iri_ref()) : prefixed_name(false);
      try {
        return make_literal(out, dt.value);
      } catch (const LiteralError& e) {
        fail(e.what());
      }
    }
    return Term::literal(out, xsd::string_type);
  }

  Term numeric_term() {
    std::string out;
    if (cur_.peek() == '+' || cur_.peek() == '-') out.push_back(cur_.advance());
    bool has_dot = false;
    while (!cur_.eof()) {
      char c = cur_.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(cur_.advance());
      } else if (c == '.' && !has_dot &&
                 std::isdigit(static_cast<unsigned char>(cur_.peek(1)))) {
        has_dot = true;
        out.push_back(cur_.advance());
      } else {
        break;
      }
    }
    return Term::literal(out, has_dot ? xsd::decimal_type : xsd::integer_type);
  }

  PatternTerm pattern_term(bool allow_a, bool allow_literal) {
    skip_ws();
    if (cur_.eof()) fail("unexpected end of query");
    char c = cur_.peek();
    if (c == '?') return variable();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '"') {
      if (!allow_literal) fail("a literal is not allowed here");
      return literal_term();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(cur_.peek(1))))) {
      if (!allow_literal) fail("a literal is not allowed here");
      return numeric_term();
    }
    Term t = prefixed_name(allow_a);
    if (t.is_literal() && !allow_literal) fail("a literal is not allowed here");
    return t;
  }

  void select() {
    skip_ws();
    eat_keyword("SELECT");
    skip_ws();
    if (at_keyword("DISTINCT")) {
      eat_keyword("DISTINCT");
      skip_ws();
    }
    while (!cur_.eof() && cur_.peek() == '?') {
      query_.projection.push_back(variable().name);
      skip_ws();
    }
    if (query_.projection.empty()) fail("SELECT requires at least one variable");
    eat_keyword("WHERE");
    skip_ws();
    expect('{', "to open the pattern block");
    block();
    skip_ws();
    if (at_keyword("ORDER")) {
      eat_keyword("ORDER");
      skip_ws();
      eat_keyword("BY");
      skip_ws();
      while (!cur_.eof() && cur_.peek() == '?') {
        query_.order_by.push_back(variable().name);
        skip_ws();
      }
      if (query_.order_by.empty()) fail("ORDER BY requires at least one variable");
    }
  }

  void block() {
    while (true) {
      skip_ws();
      if (cur_.eof()) fail("unterminated pattern block (missing '}')");
      if (cur_.peek() == '}') {
        cur_.advance();
        return;
      }
      if (at_keyword("FILTER")) {
        eat_keyword("FILTER");
        skip_ws();
        expect('(', "after FILTER");
        query_.filters.push_back(or_expr());
        skip_ws();
        expect(')', "to close FILTER");
        skip_ws();
        if (!cur_.eof() && cur_.peek() == '.') cur_.advance();
        continue;
      }
      triple_statement();
    }
  }

  void triple_statement() {
    PatternTerm subject = pattern_term(false, false);
    if (auto* t = std::get_if<Term>(&subject); t && t->is_literal())
      fail("triple pattern subject must not be a literal");
    while (true) {
      PatternTerm predicate = pattern_term(true, false);
      while (true) {
        PatternTerm object = pattern_term(false, true);
        query_.bgp.push_back({subject, predicate, object});
        skip_ws();
        if (!cur_.eof() && cur_.peek() == ',') {
          cur_.advance();
          continue;
        }
        break;
      }
      skip_ws();
      if (!cur_.eof() && cur_.peek() == ';') {
        cur_.advance();
        skip_ws();
        if (!cur_.eof() && (cur_.peek() == '.' || cur_.peek() == '}')) {
          if (cur_.peek() == '.') cur_.advance();
          return;
        }
        continue;
      }
      if (!cur_.eof() && cur_.peek() == '.') {
        cur_.advance();
        return;
      }
      if (!cur_.eof() && cur_.peek() == '}') return;  // final '.' optional
      fail("expected ';', ',', '.' or '}' after object");
    }
  }

  std::variant<Variable, Term> operand() {
    skip_ws();
    char c = cur_.peek();
    if (c == '?') return variable();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '"') return literal_term();
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(cur_.peek(1)))))
      return numeric_term();
    return prefixed_name(false);
  }

  FilterExpr or_expr() {
    FilterExpr left = and_expr();
    while (true) {
      skip_ws();
      if (cur_.peek() == '|' && cur_.peek(1) == '|') {
        cur_.advance();
        cur_.advance();
        FilterExpr node;
        node.kind = FilterExpr::Kind::Or;
        node.children.push_back(std::move(left));
        node.children.push_back(and_expr());
        left = std::move(node);
      } else {
        return left;
      }
    }
  }

  FilterExpr and_expr() {
    FilterExpr left = unary_expr();
    while (true) {
      skip_ws();
      if (cur_.peek() == '&' && cur_.peek(1) == '&') {
        cur_.advance();
        cur_.advance();
        FilterExpr node;
        node.kind = FilterExpr::Kind::And;
        node.children.push_back(std::move(left));
        node.children.push_back(unary_expr());
        left = std::move(node);
      } else {
        return left;
      }
    }
  }

  FilterExpr unary_expr() {
    skip_ws();
    if (cur_.peek() == '!' && cur_.peek(1) != '=') {
      cur_.advance();
      FilterExpr node;
      node.kind = FilterExpr::Kind::Not;
      node.children.push_back(unary_expr());
      return node;
    }
    if (cur_.peek() == '(') {
      cur_.advance();
      FilterExpr inner = or_expr();
      skip_ws();
      expect(')', "to close parenthesized expression");
      return inner;
    }
    return comparison();
  }

  FilterExpr comparison() {
    FilterExpr node;
    node.kind = FilterExpr::Kind::Comparison;
    node.lhs = operand();
    skip_ws();
    char c = cur_.peek();
    if (c == '<' || c == '>' || c == '=' || (c == '!' && cur_.peek(1) == '=')) {
      if (c == '<') {
        cur_.advance();
        node.op = cur_.peek() == '=' ? (cur_.advance(), FilterExpr::Op::Le) : FilterExpr::Op::Lt;
      } else if (c == '>') {
        cur_.advance();
        node.op = cur_.peek() == '=' ? (cur_.advance(), FilterExpr::Op::Ge) : FilterExpr::Op::Gt;
      } else if (c == '=') {
        cur_.advance();
        node.op = FilterExpr::Op::Eq;
      } else {
        cur_.advance();
        cur_.advance();
        node.op = FilterExpr::Op::Ne;
      }
      node.rhs = operand();
      return node;
    }
    fail("expected a comparison operator in filter");
  }

  void check_variable_scopes() {
    std::set<std::string> bgp_vars;
    auto collect = [&bgp_vars](const PatternTerm& pt) {
      if (auto* v = std::get_if<Variable>(&pt)) bgp_vars.insert(v->name);
    };
    for (const TriplePattern& p : query_.bgp) {
      collect(p.subject);
      collect(p.predicate);
      collect(p.object);
    }
    for (const std::string& v : query_.projection)
      if (!bgp_vars.count(v))
        throw QParseError{1, 1, "projected variable ?" + v + " does not occur in the pattern"};
    for (const std::string& v : query_.order_by)
      if (!bgp_vars.count(v))
        throw QParseError{1, 1, "ORDER BY variable ?" + v + " does not occur in the pattern"};
    std::vector<const FilterExpr*> todo;
    for (const FilterExpr& f : query_.filters) todo.push_back(&f);
    while (!todo.empty()) {
      const FilterExpr* f = todo.back();
      todo.pop_back();
      for (const FilterExpr& c : f->children) todo.push_back(&c);
      for (const auto& side : {f->lhs, f->rhs}) {
        if (!side) continue;
        if (auto* v = std::get_if<Variable>(&*side); v && !bgp_vars.count(v->name))
          throw QParseError{1, 1,
                            "filtered variable ?" + v->name + " does not occur in the pattern"};
      }
    }
  }
};

}  // namespace

QueryParseResult parse_query(const std::string& text, const PrefixMap& ambient) {
  return QueryParser(text, ambient).run();
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using Bindings = std::map<std::string, Term>;

std::optional<Term> resolve(const PatternTerm& pt, const Bindings& b) {
  if (auto* t = std::get_if<Term>(&pt)) return *t;
  auto it = b.find(std::get<Variable>(pt).name);
  if (it == b.end()) return std::nullopt;
  return it->second;
}

bool is_numeric_family(const Term& t) {
  return t.datatype == xsd::integer_type || t.datatype == xsd::decimal_type ||
         t.datatype == xsd::gyear_type;
}

std::optional<long double> numeric_value(const Term& t) {
  errno = 0;
  char* end = nullptr;
  long double v = std::strtold(t.value.c_str(), &end);
  if (end == t.value.c_str() || (end && *end != '\0')) return std::nullopt;
  return v;
}

// Three-valued comparison result; nullopt = type error (incompatible).
std::optional<bool> compare_terms(const Term& a, const Term& b, FilterExpr::Op op) {
  using Op = FilterExpr::Op;
  auto from_ordering = [op](int cmp) -> bool {
    switch (op) {
      case Op::Lt: return cmp < 0;
      case Op::Le: return cmp <= 0;
      case Op::Eq: return cmp == 0;
      case Op::Ne: return cmp != 0;
      case Op::Ge: return cmp >= 0;
      case Op::Gt: return cmp > 0;
    }
    return false;
  };

  if (a.is_literal() && b.is_literal()) {
    if (is_numeric_family(a) && is_numeric_family(b)) {
      auto va = numeric_value(a);
      auto vb = numeric_value(b);
      if (!va || !vb) return std::nullopt;
      return from_ordering(*va < *vb ? -1 : (*va > *vb ? 1 : 0));
    }
    if (a.datatype == xsd::date_type && b.datatype == xsd::date_type)
      return from_ordering(a.value.compare(b.value));
    // Strings, language strings, booleans: equality only.
    bool same_family = (a.datatype == b.datatype) ||
                       ((a.datatype == xsd::string_type || a.datatype == rdf::lang_string_type) &&
                        (b.datatype == xsd::string_type || b.datatype == rdf::lang_string_type));
    if (!same_family) return std::nullopt;
    if (op == Op::Eq) return a == b;
    if (op == Op::Ne) return !(a == b);
    return std::nullopt;
  }

  if (a.kind == b.kind) {  // IRI/IRI or blank/blank
    if (op == Op::Eq) return a.value == b.value;
    if (op == Op::Ne) return a.value != b.value;
    return std::nullopt;
  }
  return std::nullopt;  // mixed kinds are incomparable
}

std::optional<bool> eval_filter(const FilterExpr& f, const Bindings& b) {
  switch (f.kind) {
    case FilterExpr::Kind::Comparison: {
      auto get = [&b](const std::variant<Variable, Term>& side) -> std::optional<Term> {
        if (auto* t = std::get_if<Term>(&side)) return *t;
        auto it = b.find(std::get<Variable>(side).name);
        if (it == b.end()) return std::nullopt;
        return it->second;
      };
      auto lhs = get(*f.lhs);
      auto rhs = get(*f.rhs);
      if (!lhs || !rhs) return std::nullopt;
      return compare_terms(*lhs, *rhs, f.op);
    }
    case FilterExpr::Kind::And: {
      auto l = eval_filter(f.children[0], b);
      auto r = eval_filter(f.children[1], b);
      if (l.has_value() && !*l) return false;
      if (r.has_value() && !*r) return false;
      if (!l || !r) return std::nullopt;
      return true;
    }
    case FilterExpr::Kind::Or: {
      auto l = eval_filter(f.children[0], b);
      auto r = eval_filter(f.children[1], b);
      if (l.has_value() && *l) return true;
      if (r.has_value() && *r) return true;
      if (!l || !r) return std::nullopt;
      return false;
    }
    case FilterExpr::Kind::Not: {
      auto v = eval_filter(f.children[0], b);
      if (!v) return std::nullopt;
      return !*v;
    }
  }
  return std::nullopt;
}

void filter_vars(const FilterExpr& f, std::set<std::string>& out) {
  for (const auto& side : {f.lhs, f.rhs})
    if (side)
      if (auto* v = std::get_if<Variable>(&*side)) out.insert(v->name);
  for (const FilterExpr& c : f.children) filter_vars(c, out);
}

struct Evaluator {
  const Query& query;
  const Graph& graph;
  std::vector<std::set<std::string>> filter_var_sets;
  std::vector<Bindings> solutions;

  explicit Evaluator(const Query& q, const Graph& g) : query(q), graph(g) {
    for (const FilterExpr& f : q.filters) {
      std::set<std::string> vars;
      filter_vars(f, vars);
      filter_var_sets.push_back(std::move(vars));
    }
  }

  int bound_count(const TriplePattern& p, const Bindings& b) const {
    int n = 0;
    for (const PatternTerm* pt : {&p.subject, &p.predicate, &p.object})
      if (resolve(*pt, b)) ++n;
    return n;
  }

  std::size_t cardinality_estimate(const TriplePattern& p, const Bindings& b) const {
    std::size_t best = graph.size();
    auto consider = [&](const PatternTerm& pt, int position) {
      if (auto t = resolve(pt, b)) best = std::min(best, graph.index_cardinality(position, *t));
    };
    consider(p.subject, 0);
    consider(p.predicate, 1);
    consider(p.object, 2);
    return best;
  }

  // Filters whose variables are all bound and that were not applied yet.
  bool filters_hold(const Bindings& b, std::vector<bool>& applied) const {
    for (std::size_t i = 0; i < query.filters.size(); ++i) {
      if (applied[i]) continue;
      bool all_bound = true;
      for (const std::string& v : filter_var_sets[i])
        if (!b.count(v)) {
          all_bound = false;
          break;
        }
      if (!all_bound) continue;
      applied[i] = true;
      auto val = eval_filter(query.filters[i], b);
      if (!val.has_value() || !*val) return false;
    }
    return true;
  }

  void join(std::vector<bool>& used, Bindings& bindings, std::vector<bool>& filters_applied,
            std::size_t remaining) {
    if (remaining == 0) {
      solutions.push_back(bindings);
      return;
    }
    // Most selective next: highest bound count, then smallest index estimate,
    // then original order.
    std::size_t chosen = query.bgp.size();
    int best_bound = -1;
    std::size_t best_card = 0;
    for (std::size_t i = 0; i < query.bgp.size(); ++i) {
      if (used[i]) continue;
      int bc = bound_count(query.bgp[i], bindings);
      std::size_t card = cardinality_estimate(query.bgp[i], bindings);
      if (bc > best_bound || (bc == best_bound && card < best_card)) {
        chosen = i;
        best_bound = bc;
        best_card = card;
      }
    }
    const TriplePattern& p = query.bgp[chosen];
    used[chosen] = true;

    auto s = resolve(p.subject, bindings);
    auto pr = resolve(p.predicate, bindings);
    auto o = resolve(p.object, bindings);
    for (const Triple& t : graph.match(s, pr, o)) {
      Bindings next = bindings;
      bool ok = true;
      auto unify = [&next, &ok](const PatternTerm& pt, const Term& value) {
        if (auto* v = std::get_if<Variable>(&pt)) {
          auto it = next.find(v->name);
          if (it == next.end())
            next.emplace(v->name, value);
          else if (!(it->second == value))
            ok = false;
        }
      };
      unify(p.subject, t.subject);
      unify(p.predicate, t.predicate);
      unify(p.object, t.object);
      if (!ok) continue;
      std::vector<bool> fa = filters_applied;
      if (!filters_hold(next, fa)) continue;
      join(used, next, fa, remaining - 1);
    }
    used[chosen] = false;
  }
};

int term_order(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (*a == *b) return 0;
  return *a < *b ? -1 : 1;
}

}  // namespace

ResultTable evaluate(const Query& q, const Graph& g) {
  ResultTable table;
  table.header = q.projection;

  Evaluator ev(q, g);
  if (q.bgp.empty()) return table;  // no patterns: no solutions (grammar demands vars in BGP)

  std::vector<bool> used(q.bgp.size(), false);
  Bindings bindings;
  std::vector<bool> filters_applied(q.filters.size(), false);
  ev.join(used, bindings, filters_applied, q.bgp.size());

  for (const Bindings& b : ev.solutions) {
    std::vector<std::optional<Term>> row;
    row.reserve(q.projection.size());
    for (const std::string& v : q.projection) {
      auto it = b.find(v);
      row.push_back(it == b.end() ? std::nullopt : std::make_optional(it->second));
    }
    table.rows.push_back(std::move(row));
  }

  if (q.distinct) {
    std::vector<std::vector<std::optional<Term>>> unique;
    for (auto& row : table.rows)
      if (std::find(unique.begin(), unique.end(), row) == unique.end()) unique.push_back(row);
    table.rows = std::move(unique);
  }

  if (!q.order_by.empty()) {
    std::vector<std::size_t> key_columns;
    for (const std::string& v : q.order_by) {
      auto it = std::find(table.header.begin(), table.header.end(), v);
      if (it != table.header.end())
        key_columns.push_back(static_cast<std::size_t>(it - table.header.begin()));
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [&key_columns](const auto& a, const auto& b) {
                       for (std::size_t c : key_columns) {
                         int cmp = term_order(a[c], b[c]);
                         if (cmp != 0) return cmp < 0;
                       }
                       return false;
                     });
  }
  return table;
}

std::string render_term_plain(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind) {
    case TermKind::Literal: return t.value;
    case TermKind::BlankNode: return "_:" + t.value;
    case TermKind::Iri: {
      if (auto s = prefixes.shrink(t.value)) return *s;
      return t.value;
    }
  }
  return {};
}

std::string render_term_csv(const Term& t, const PrefixMap& prefixes) {
  switch (t.kind) {
    case TermKind::BlankNode:
      return "_:" + t.value;
    case TermKind::Iri:
      return render_iri(t.value, prefixes);
    case TermKind::Literal: {
      std::string out = "\"" + escape_turtle_string(t.value) + "\"";
      if (t.datatype == rdf::lang_string_type) return out + "@" + t.lang;
      if (t.datatype == xsd::string_type) return out;
      return out + "^^" + render_iri(t.datatype, prefixes);
    }
  }
  return {};
}

std::string table_to_csv(const ResultTable& table, const PrefixMap& prefixes) {
  auto csv_cell = [](const std::string& cell) {
    if (cell.find(',') == std::string::npos && cell.find('\n') == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
      if (c == '"') quoted += "\"\"";
      else quoted.push_back(c);
    }
    return quoted + "\"";
  };

  std::ostringstream out;
  for (std::size_t i = 0; i < table.header.size(); ++i)
    out << (i ? "," : "") << table.header[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      if (row[i]) out << csv_cell(render_term_csv(*row[i], prefixes));
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace zamo

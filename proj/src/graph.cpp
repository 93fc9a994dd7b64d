#include "zamo/graph.hpp"

#include <algorithm>

namespace zamo {

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw std::invalid_argument("triple subject must not be a literal");
  if (!predicate.is_iri()) throw std::invalid_argument("triple predicate must be an IRI");
}

bool Graph::insert(Triple t) {
  if (frozen_) throw FrozenGraphError();
  if (index_of_.count(t)) return false;
  std::size_t idx = triples_.size();
  by_subject_[t.subject].push_back(idx);
  by_predicate_[t.predicate].push_back(idx);
  by_object_[t.object].push_back(idx);
  index_of_.emplace(t, idx);
  triples_.push_back(std::move(t));
  return true;
}

std::size_t Graph::index_cardinality(int position, const Term& t) const {
  const auto& index = position == 0 ? by_subject_ : position == 1 ? by_predicate_ : by_object_;
  auto it = index.find(t);
  return it == index.end() ? 0 : it->second.size();
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  auto agrees = [&](const Triple& t) {
    return (!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o);
  };

  // Scan the smallest applicable index; candidate lists are kept in
  // insertion order, so results are too.
  const std::vector<std::size_t>* candidates = nullptr;
  auto consider = [&](const std::unordered_map<Term, std::vector<std::size_t>, TermHash>& index,
                      const std::optional<Term>& key) {
    if (!key) return;
    auto it = index.find(*key);
    static const std::vector<std::size_t> kEmpty;
    const auto* list = it == index.end() ? &kEmpty : &it->second;
    if (!candidates || list->size() < candidates->size()) candidates = list;
  };
  consider(by_subject_, s);
  consider(by_predicate_, p);
  consider(by_object_, o);

  std::vector<Triple> out;
  if (candidates) {
    for (std::size_t idx : *candidates)
      if (agrees(triples_[idx])) out.push_back(triples_[idx]);
  } else {
    out.assign(triples_.begin(), triples_.end());
  }
  return out;
}

Graph Graph::merged(const Graph& a, const Graph& b) {
  Graph out;
  for (const Triple& t : a.triples_) out.insert(t);
  for (const Triple& t : b.triples_) out.insert(t);
  return out;
}

namespace {

// Relabel blank nodes _:b0, _:b1, ... in first-occurrence order.
std::vector<Triple> canonical_triples(const Graph& g) {
  std::unordered_map<std::string, std::string> relabel;
  auto canon = [&relabel](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto it = relabel.find(t.value);
    if (it == relabel.end())
      it = relabel.emplace(t.value, "b" + std::to_string(relabel.size())).first;
    return Term::blank(it->second);
  };
  std::vector<Triple> out;
  out.reserve(g.size());
  for (const Triple& t : g.triples())
    out.emplace_back(canon(t.subject), canon(t.predicate), canon(t.object));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool Graph::equals(const Graph& other) const {
  if (size() != other.size()) return false;
  return canonical_triples(*this) == canonical_triples(other);
}

}  // namespace zamo

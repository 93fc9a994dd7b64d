#pragma once
// Triples and the indexed in-memory graph store.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "zamo/term.hpp"

namespace zamo {

// A ground RDF triple. The constructor enforces the shape invariants:
// subject is IRI or blank node, predicate is an IRI.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  Triple(Term s, Term p, Term o);

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    TermHash th;
    std::size_t h = th(t.subject);
    h ^= th(t.predicate) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= th(t.object) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct FrozenGraphError : std::logic_error {
  FrozenGraphError() : std::logic_error("mutation of a frozen graph") {}
};

// Set of triples with per-position indexes. Iteration follows insertion
// order so serializer output and test logs stay reproducible.
class Graph {
 public:
  Graph() = default;

  // Returns true if the triple was new. Throws FrozenGraphError after freeze().
  bool insert(Triple t);
  bool insert(Term s, Term p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }

  bool contains(const Triple& t) const { return index_of_.count(t) != 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::span<const Triple> triples() const { return triples_; }

  // Wildcard pattern lookup; unset positions match anything. Results come
  // back in insertion order.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  // Number of triples with the given term at the given position (0=s,1=p,2=o).
  std::size_t index_cardinality(int position, const Term& t) const;

  // Union of two graphs; inputs untouched, result unfrozen.
  static Graph merged(const Graph& a, const Graph& b);

  // Structural equality. Blank nodes are relabeled canonically in
  // first-occurrence order before comparing; adequate for the shipped
  // fixtures, which avoid blank nodes entirely.
  bool equals(const Graph& other) const;

 private:
  std::vector<Triple> triples_;
  std::unordered_map<Triple, std::size_t, TripleHash> index_of_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_subject_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_predicate_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_object_;
  bool frozen_ = false;
};

}  // namespace zamo

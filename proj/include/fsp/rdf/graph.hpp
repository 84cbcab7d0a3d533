#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fsp/rdf/term.hpp"

namespace fsp::rdf {

/// Dense handle into a Graph's term dictionary. Only meaningful together
/// with the Graph that issued it.
using TermId = std::uint32_t;

struct IdTriple {
  TermId subject;
  TermId predicate;
  TermId object;

  friend bool operator==(const IdTriple&, const IdTriple&) = default;
  friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
};

struct PredicateObject {
  TermId predicate;
  TermId object;
};

/// A duplicate-free set of triples with three indexes kept in step with
/// every insert: subject -> (p, o), (p, o) -> subjects, and
/// class -> instances (from triples whose predicate is the type predicate).
class Graph {
 public:
  Graph() : Graph(Term::iri(std::string(kRdfType))) {}
  explicit Graph(Term type_predicate);

  const Term& type_predicate() const noexcept { return term(type_id_); }
  TermId type_predicate_id() const noexcept { return type_id_; }

  TermId intern(const Term& t);
  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const { return terms_.at(id); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Returns false when the triple was already present.
  bool insert(const Triple& t);
  bool insert(TermId s, TermId p, TermId o);
  void insert_all(const Graph& other);

  bool contains(const Triple& t) const;
  bool contains(TermId s, TermId p, TermId o) const;

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// Triples in insertion order.
  std::span<const IdTriple> triples() const noexcept { return triples_; }
  Triple resolve(const IdTriple& t) const;

  std::span<const PredicateObject> edges_of(TermId subject) const;
  std::span<const TermId> subjects_with(TermId predicate, TermId object) const;
  std::span<const TermId> instances_of(TermId cls) const;

  /// Sorted by the N-Triples text of (subject, predicate, object).
  std::vector<Triple> sorted_triples() const;

  /// Distinct subjects and objects of all triples.
  std::vector<TermId> nodes() const;
  std::vector<TermId> subjects() const;

 private:
  static std::uint64_t pack(TermId a, TermId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  struct IdTripleHash {
    std::size_t operator()(const IdTriple& t) const noexcept {
      std::uint64_t h = pack(t.subject, t.predicate) * 0x9e3779b97f4a7c15ULL;
      return static_cast<std::size_t>(h ^ (t.object * 0xc2b2ae3d27d4eb4fULL));
    }
  };

  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> term_ids_;
  TermId type_id_ = 0;

  std::vector<IdTriple> triples_;
  std::unordered_set<IdTriple, IdTripleHash> triple_set_;
  std::unordered_map<TermId, std::vector<PredicateObject>> by_subject_;
  std::unordered_map<std::uint64_t, std::vector<TermId>> by_predicate_object_;
  std::unordered_map<TermId, std::vector<TermId>> by_class_;
};

/// Set equality on resolved triples; the two graphs may have different
/// dictionaries.
bool set_equal(const Graph& a, const Graph& b);

}  // namespace fsp::rdf

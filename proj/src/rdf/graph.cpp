#include "fsp/rdf/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "fsp/error.hpp"

namespace fsp::rdf {

Graph::Graph(Term type_predicate) {
  if (!type_predicate.is_iri()) {
    throw PreconditionError("type predicate must be an IRI");
  }
  type_id_ = intern(type_predicate);
}

TermId Graph::intern(const Term& t) {
  auto [it, inserted] =
      term_ids_.try_emplace(t, static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

std::optional<TermId> Graph::lookup(const Term& t) const {
  auto it = term_ids_.find(t);
  if (it == term_ids_.end()) return std::nullopt;
  return it->second;
}

bool Graph::insert(const Triple& t) {
  validate(t);
  return insert(intern(t.subject), intern(t.predicate), intern(t.object));
}

bool Graph::insert(TermId s, TermId p, TermId o) {
  if (terms_.at(s).is_literal()) {
    throw PreconditionError("literal in subject position: " +
                            terms_[s].to_ntriples());
  }
  if (!terms_.at(p).is_iri()) {
    throw PreconditionError("predicate must be an IRI: " +
                            terms_[p].to_ntriples());
  }
  (void)terms_.at(o);
  IdTriple t{s, p, o};
  if (!triple_set_.insert(t).second) return false;
  triples_.push_back(t);
  by_subject_[s].push_back({p, o});
  by_predicate_object_[pack(p, o)].push_back(s);
  if (p == type_id_) by_class_[o].push_back(s);
  return true;
}

void Graph::insert_all(const Graph& other) {
  for (const IdTriple& t : other.triples()) {
    insert(intern(other.term(t.subject)), intern(other.term(t.predicate)),
           intern(other.term(t.object)));
  }
}

bool Graph::contains(const Triple& t) const {
  auto s = lookup(t.subject);
  auto p = lookup(t.predicate);
  auto o = lookup(t.object);
  return s && p && o && contains(*s, *p, *o);
}

bool Graph::contains(TermId s, TermId p, TermId o) const {
  return triple_set_.contains(IdTriple{s, p, o});
}

Triple Graph::resolve(const IdTriple& t) const {
  return Triple{term(t.subject), term(t.predicate), term(t.object)};
}

std::span<const PredicateObject> Graph::edges_of(TermId subject) const {
  auto it = by_subject_.find(subject);
  if (it == by_subject_.end()) return {};
  return it->second;
}

std::span<const TermId> Graph::subjects_with(TermId predicate,
                                             TermId object) const {
  auto it = by_predicate_object_.find(pack(predicate, object));
  if (it == by_predicate_object_.end()) return {};
  return it->second;
}

std::span<const TermId> Graph::instances_of(TermId cls) const {
  auto it = by_class_.find(cls);
  if (it == by_class_.end()) return {};
  return it->second;
}

std::vector<Triple> Graph::sorted_triples() const {
  using Line = std::tuple<std::string, std::string, std::string, std::size_t>;
  std::vector<Line> lines;
  lines.reserve(triples_.size());
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const IdTriple& t = triples_[i];
    lines.emplace_back(term(t.subject).to_ntriples(),
                       term(t.predicate).to_ntriples(),
                       term(t.object).to_ntriples(), i);
  }
  std::sort(lines.begin(), lines.end());
  std::vector<Triple> out;
  out.reserve(lines.size());
  for (const Line& l : lines) out.push_back(resolve(triples_[std::get<3>(l)]));
  return out;
}

std::vector<TermId> Graph::nodes() const {
  std::vector<TermId> out;
  out.reserve(triples_.size() * 2);
  for (const IdTriple& t : triples_) {
    out.push_back(t.subject);
    out.push_back(t.object);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TermId> Graph::subjects() const {
  std::vector<TermId> out;
  out.reserve(by_subject_.size());
  for (const auto& [s, edges] : by_subject_) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

bool set_equal(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (const IdTriple& t : a.triples()) {
    if (!b.contains(a.resolve(t))) return false;
  }
  return true;
}

}  // namespace fsp::rdf

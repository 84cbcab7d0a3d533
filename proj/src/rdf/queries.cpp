#include "fsp/rdf/queries.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "fsp/error.hpp"

namespace fsp::rdf {

namespace {

constexpr TermId kMissing = std::numeric_limits<TermId>::max();

}  // namespace

std::vector<Term> entities_of_class(const Graph& g, const Term& cls) {
  std::vector<Term> out;
  if (auto id = g.lookup(cls)) {
    for (TermId s : g.instances_of(*id)) out.push_back(g.term(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PropertyList class_properties(const Graph& g, const Term& cls) {
  auto id = g.lookup(cls);
  if (!id) return {};
  std::set<TermId> seen;
  for (TermId s : g.instances_of(*id)) {
    for (const PredicateObject& e : g.edges_of(s)) {
      if (e.predicate != g.type_predicate_id()) seen.insert(e.predicate);
    }
  }
  PropertyList out;
  for (TermId p : seen) out.push_back(g.term(p));
  return canonical(std::move(out));
}

std::vector<TermId> property_ids(const Graph& g, const PropertyList& sp) {
  std::vector<TermId> ids;
  ids.reserve(sp.size());
  for (const Term& p : sp) {
    auto id = g.lookup(p);
    ids.push_back(id ? *id : kMissing);
  }
  return ids;
}

bool object_tuple_into(const Graph& g, TermId subject, std::span<const TermId> sp,
                       std::vector<TermId>& objects) {
  if (sp.empty()) throw PreconditionError("property list must not be empty");
  objects.assign(sp.size(), kMissing);
  for (const PredicateObject& e : g.edges_of(subject)) {
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (sp[i] != e.predicate) continue;
      if (objects[i] != kMissing) {
        throw AssumptionViolation("functionality violated: " +
                                  g.term(subject).to_ntriples() + " has several " +
                                  g.term(e.predicate).to_ntriples() + " objects");
      }
      objects[i] = e.object;
    }
  }
  return std::find(objects.begin(), objects.end(), kMissing) == objects.end();
}

std::optional<std::vector<TermId>> object_tuple(const Graph& g, TermId subject,
                                                std::span<const TermId> sp) {
  std::vector<TermId> objects;
  if (!object_tuple_into(g, subject, sp, objects)) return std::nullopt;
  return objects;
}

std::optional<std::vector<Term>> object_tuple(const Graph& g, const Term& subject,
                                              const PropertyList& sp) {
  if (sp.empty()) throw PreconditionError("property list must not be empty");
  if (!is_canonical(sp)) throw PreconditionError("property list is not canonical");
  auto s = g.lookup(subject);
  if (!s) return std::nullopt;
  auto ids = object_tuple(g, *s, property_ids(g, sp));
  if (!ids) return std::nullopt;
  std::vector<Term> out;
  out.reserve(ids->size());
  for (TermId o : *ids) out.push_back(g.term(o));
  return out;
}

}  // namespace fsp::rdf

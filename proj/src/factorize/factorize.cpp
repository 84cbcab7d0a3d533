#include "fsp/factorize.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <unordered_map>

#include "fsp/error.hpp"
#include "fsp/rdf/queries.hpp"

namespace fsp::factor {

namespace {

class Fnv1a64 {
 public:
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
  }
  void separator(char c) { update(std::string_view(&c, 1)); }
  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::int64_t node_count(const std::vector<rdf::IdTriple>& edges) {
  std::set<rdf::TermId> nodes;
  for (const rdf::IdTriple& t : edges) {
    nodes.insert(t.subject);
    nodes.insert(t.object);
  }
  return static_cast<std::int64_t>(nodes.size());
}

}  // namespace

std::size_t EntityMapping::surrogate_count() const {
  std::set<rdf::Term> distinct;
  for (const auto& [entity, surrogate] : pairs) distinct.insert(surrogate);
  return distinct.size();
}

rdf::Term surrogate_iri(const rdf::Term& cls, const rdf::PropertyList& sp,
                        const std::vector<rdf::Term>& objects) {
  if (sp.size() != objects.size()) {
    throw PreconditionError("object tuple does not match the property list");
  }
  Fnv1a64 h;
  h.update(cls.to_ntriples());
  h.separator('\x1f');
  for (std::size_t i = 0; i < sp.size(); ++i) {
    h.update(sp[i].to_ntriples());
    h.separator('\x1f');
    h.update(objects[i].to_ntriples());
    h.separator('\x1e');
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(h.digest()));
  return rdf::Term::iri(std::string("urn:fsp:") + hex);
}

EntityMapping build_mapping(const rdf::Graph& g, const rdf::Term& cls,
                            const rdf::PropertyList& sp) {
  const stats::StarPatternTable table = stats::build_star_table(g, cls, sp);
  EntityMapping mapping;
  mapping.class_iri = cls;
  mapping.properties = sp;
  std::map<rdf::Term, const stats::ObjectTuple*> owner;
  for (const auto& [tuple, entities] : table.groups) {
    std::vector<rdf::Term> objects;
    objects.reserve(tuple.size());
    for (rdf::TermId o : tuple) objects.push_back(g.term(o));
    rdf::Term sg = surrogate_iri(cls, sp, objects);
    if (auto [it, fresh] = owner.emplace(sg, &tuple); !fresh) {
      throw IntegrityError("surrogate hash collision on " + sg.to_ntriples());
    }
    for (rdf::TermId e : entities) mapping.pairs.emplace(g.term(e), sg);
  }
  return mapping;
}

Factorization factorize(const rdf::Graph& g, const rdf::Term& cls,
                        const rdf::PropertyList& sp, const Options& options) {
  if (sp.empty()) throw PreconditionError("property list must not be empty");
  Factorization out{rdf::Graph(g.type_predicate()), {}, {}};
  out.mapping.class_iri = cls;
  out.mapping.properties = sp;

  auto cls_id = g.lookup(cls);
  if (!cls_id || g.instances_of(*cls_id).empty()) {
    out.warnings.push_back("class " + cls.to_ntriples() +
                           " has no instances; graph copied unchanged");
    out.graph.insert_all(g);
    return out;
  }
  out.mapping = build_mapping(g, cls, sp);

  rdf::Graph& dst = out.graph;
  const rdf::TermId type_id = dst.type_predicate_id();
  const rdf::TermId inst_id = dst.intern(options.instance_of);
  const rdf::TermId dst_cls = dst.intern(cls);
  std::unordered_map<rdf::TermId, rdf::TermId> surrogate_of;  // source id -> dst id
  for (const auto& [entity, sg] : out.mapping.pairs) {
    surrogate_of.emplace(*g.lookup(entity), dst.intern(sg));
  }
  std::set<rdf::TermId> in_sp;
  for (rdf::TermId p : rdf::property_ids(g, sp)) in_sp.insert(p);

  for (const rdf::IdTriple& t : g.triples()) {
    const rdf::TermId s = dst.intern(g.term(t.subject));
    const rdf::TermId p = dst.intern(g.term(t.predicate));
    const rdf::TermId o = dst.intern(g.term(t.object));
    auto it = surrogate_of.find(t.subject);
    if (it == surrogate_of.end()) {
      dst.insert(s, p, o);
    } else if (p == type_id && o == dst_cls) {
      dst.insert(s, inst_id, it->second);
      dst.insert(it->second, type_id, o);
    } else if (in_sp.contains(t.predicate)) {
      dst.insert(it->second, p, o);
    } else {
      dst.insert(s, p, o);
    }
  }
  return out;
}

rdf::Graph expand(const rdf::Graph& factorized, const EntityMapping* hint,
                  const Options& options) {
  rdf::Graph out(factorized.type_predicate());
  std::map<rdf::Term, rdf::Term> member_of;
  auto bind = [&](const rdf::Term& entity, const rdf::Term& sg) {
    auto [it, fresh] = member_of.emplace(entity, sg);
    if (!fresh && !(it->second == sg)) {
      throw IntegrityError("functionality violated: " + entity.to_ntriples() +
                           " is an instance of both " + it->second.to_ntriples() +
                           " and " + sg.to_ntriples());
    }
  };

  auto inst_id = factorized.lookup(options.instance_of);
  if (inst_id) {
    for (const rdf::IdTriple& t : factorized.triples()) {
      if (t.predicate == *inst_id) {
        bind(factorized.term(t.subject), factorized.term(t.object));
      }
    }
  }
  if (hint) {
    for (const auto& [entity, sg] : hint->pairs) bind(entity, sg);
  }

  std::set<rdf::TermId> surrogates;
  for (const auto& [entity, sg] : member_of) {
    auto id = factorized.lookup(sg);
    if (!id || factorized.edges_of(*id).empty()) {
      throw IntegrityError("dangling instanceOf: surrogate " + sg.to_ntriples() +
                           " has no triples");
    }
    surrogates.insert(*id);
  }

  for (const rdf::IdTriple& t : factorized.triples()) {
    if (inst_id && t.predicate == *inst_id) continue;
    if (surrogates.contains(t.subject)) continue;
    out.insert(factorized.resolve(t));
  }
  for (const auto& [entity, sg] : member_of) {
    const rdf::TermId sg_id = *factorized.lookup(sg);
    const rdf::TermId e = out.intern(entity);
    for (const rdf::PredicateObject& edge : factorized.edges_of(sg_id)) {
      out.insert(e, out.intern(factorized.term(edge.predicate)),
                 out.intern(factorized.term(edge.object)));
    }
  }
  return out;
}

rdf::Graph mapping_graph(const EntityMapping& mapping, const Options& options) {
  rdf::Graph g;
  for (const auto& [entity, sg] : mapping.pairs) {
    g.insert(rdf::Triple{entity, options.instance_of, sg});
  }
  return g;
}

FactorizationReport report(const rdf::Graph& original, const rdf::Graph& factorized,
                           const rdf::Term& cls, const rdf::PropertyList& s,
                           stats::EdgeConvention convention, const Options& options) {
  const auto before =
      stats::labeled_edges(original, cls, s, convention, options.instance_of);
  const auto after =
      stats::labeled_edges(factorized, cls, s, convention, options.instance_of);
  if (before.empty()) {
    throw UndefinedValueError("savings undefined: " + cls.to_ntriples() +
                              " has no labeled edges in the original graph");
  }
  FactorizationReport r;
  r.convention = convention;
  r.nle_before = static_cast<std::int64_t>(before.size());
  r.nle_after = static_cast<std::int64_t>(after.size());
  r.nn_before = node_count(before);
  r.nn_after = node_count(after);
  r.percent_savings = 100.0 * static_cast<double>(r.nle_before - r.nle_after) /
                      static_cast<double>(r.nle_before);
  return r;
}

}  // namespace fsp::factor

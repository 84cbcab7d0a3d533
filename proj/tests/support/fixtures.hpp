#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fsp/rdf/graph.hpp"
#include "fsp/rdf/ntriples.hpp"

namespace fsp::testing {

inline rdf::Term iri(const std::string& local) { return rdf::Term::iri("urn:ex:" + local); }

inline rdf::PropertyList props(std::initializer_list<const char*> locals) {
  rdf::PropertyList out;
  for (const char* l : locals) out.push_back(iri(l));
  return rdf::canonical(std::move(out));
}

/// Four entities of class C sharing (e1, e2, e3) on p1..p3; p4 points at e4
/// twice and at e5, e6 once each. 4 type edges + 16 property edges.
inline const char* kFourEntityGraph =
    "<urn:ex:c1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <urn:ex:C> .\n"
    "<urn:ex:c1> <urn:ex:p1> <urn:ex:e1> .\n"
    "<urn:ex:c1> <urn:ex:p2> <urn:ex:e2> .\n"
    "<urn:ex:c1> <urn:ex:p3> <urn:ex:e3> .\n"
    "<urn:ex:c1> <urn:ex:p4> <urn:ex:e4> .\n"
    "<urn:ex:c2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <urn:ex:C> .\n"
    "<urn:ex:c2> <urn:ex:p1> <urn:ex:e1> .\n"
    "<urn:ex:c2> <urn:ex:p2> <urn:ex:e2> .\n"
    "<urn:ex:c2> <urn:ex:p3> <urn:ex:e3> .\n"
    "<urn:ex:c2> <urn:ex:p4> <urn:ex:e4> .\n"
    "<urn:ex:c3> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <urn:ex:C> .\n"
    "<urn:ex:c3> <urn:ex:p1> <urn:ex:e1> .\n"
    "<urn:ex:c3> <urn:ex:p2> <urn:ex:e2> .\n"
    "<urn:ex:c3> <urn:ex:p3> <urn:ex:e3> .\n"
    "<urn:ex:c3> <urn:ex:p4> <urn:ex:e5> .\n"
    "<urn:ex:c4> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <urn:ex:C> .\n"
    "<urn:ex:c4> <urn:ex:p1> <urn:ex:e1> .\n"
    "<urn:ex:c4> <urn:ex:p2> <urn:ex:e2> .\n"
    "<urn:ex:c4> <urn:ex:p3> <urn:ex:e3> .\n"
    "<urn:ex:c4> <urn:ex:p4> <urn:ex:e6> .\n";

inline rdf::Graph four_entity_graph() { return rdf::parse_ntriples(kFourEntityGraph); }

struct RandomGraph {
  rdf::Graph graph;
  rdf::Term cls;
  rdf::PropertyList properties;
};

/// Random graph whose class `urn:ex:K` is complete and functional over its
/// properties. Entities draw from a pool of template tuples whose per-property
/// value ranges differ, so subsets vary widely in how many star patterns they
/// induce. A few unrelated triples ride along.
inline RandomGraph random_complete_functional(std::mt19937_64& rng, std::size_t min_props,
                                              std::size_t max_props,
                                              std::size_t max_entities) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n_props = uniform(min_props, max_props);
  const std::size_t n = uniform(1, max_entities);
  const std::size_t templates = uniform(1, n);
  std::vector<std::size_t> range(n_props);
  for (auto& r : range) r = uniform(1, std::max<std::size_t>(1, n));

  std::vector<std::vector<std::size_t>> pool(templates, std::vector<std::size_t>(n_props));
  for (auto& t : pool) {
    for (std::size_t j = 0; j < n_props; ++j) t[j] = uniform(0, range[j] - 1);
  }

  RandomGraph out{rdf::Graph(), rdf::Term::iri("urn:ex:K"), {}};
  for (std::size_t j = 0; j < n_props; ++j) {
    out.properties.push_back(rdf::Term::iri("urn:ex:q" + std::to_string(j)));
  }
  out.properties = rdf::canonical(out.properties);
  const rdf::Term type = out.graph.type_predicate();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = pool[i < templates ? i : uniform(0, templates - 1)];
    const rdf::Term e = rdf::Term::iri("urn:ex:k" + std::to_string(i));
    out.graph.insert({e, type, out.cls});
    for (std::size_t j = 0; j < n_props; ++j) {
      // Alternate IRI and literal objects.
      rdf::Term o = (j % 2 == 0)
                        ? rdf::Term::iri("urn:ex:v" + std::to_string(j) + "_" + std::to_string(t[j]))
                        : rdf::Term::literal(std::to_string(t[j]));
      out.graph.insert({e, rdf::Term::iri("urn:ex:q" + std::to_string(j)), o});
    }
  }
  const std::size_t noise = uniform(0, 5);
  for (std::size_t i = 0; i < noise; ++i) {
    const rdf::Term x = rdf::Term::blank("x" + std::to_string(i));
    out.graph.insert({x, type, rdf::Term::iri("urn:ex:Other")});
    out.graph.insert({x, rdf::Term::iri("urn:ex:q0"), rdf::Term::literal("noise")});
  }
  return out;
}

/// Number of distinct object tuples over `sp` among instances of `cls`, by a
/// plain scan of the triple list.
inline std::int64_t brute_force_ami(const rdf::Graph& g, const rdf::Term& cls,
                                    const rdf::PropertyList& sp) {
  std::set<rdf::Term> instances;
  std::map<rdf::Term, std::map<rdf::Term, rdf::Term>> objects;
  for (const rdf::Triple& t : g.sorted_triples()) {
    if (t.predicate == g.type_predicate() && t.object == cls) instances.insert(t.subject);
    objects[t.subject][t.predicate] = t.object;
  }
  std::set<std::vector<rdf::Term>> tuples;
  for (const rdf::Term& s : instances) {
    std::vector<rdf::Term> tuple;
    for (const rdf::Term& p : sp) {
      auto it = objects[s].find(p);
      if (it == objects[s].end()) break;
      tuple.push_back(it->second);
    }
    if (tuple.size() == sp.size()) tuples.insert(tuple);
  }
  return static_cast<std::int64_t>(tuples.size());
}

/// All subsets of `s` with at least `min_size` members.
inline std::vector<rdf::PropertyList> subsets(const rdf::PropertyList& s, std::size_t min_size) {
  std::vector<rdf::PropertyList> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s.size()); ++mask) {
    rdf::PropertyList sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) sub.push_back(s[i]);
    }
    if (sub.size() >= min_size) out.push_back(sub);
  }
  return out;
}

}  // namespace fsp::testing

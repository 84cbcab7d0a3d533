#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "fsp/rdf/graph.hpp"
#include "fsp/rdf/term.hpp"

namespace fsp::stats {

/// Objects aligned with a table's canonical property list.
using ObjectTuple = std::vector<rdf::TermId>;
using Rational = boost::rational<std::int64_t>;

/// The star patterns of one class over one property set: each distinct
/// object tuple maps to the entities that instantiate it. Entities lacking
/// some property are kept apart in `skipped`.
///
/// Ids refer to the graph the table was built from.
struct StarPatternTable {
  rdf::Term class_iri;
  rdf::PropertyList properties;
  std::vector<rdf::TermId> property_ids;
  std::map<ObjectTuple, std::vector<rdf::TermId>> groups;
  std::vector<rdf::TermId> skipped;

  std::size_t matched() const;
};

/// Throws AssumptionViolation on a functionality violation, or when
/// `strict` is set and some instance lacks a property.
StarPatternTable build_star_table(const rdf::Graph& g, const rdf::Term& cls,
                                  const rdf::PropertyList& sp, bool strict = false);

/// Regroups a table onto a subset of its properties by merging groups; only
/// the skipped entities are looked up in the graph again. The result equals
/// build_star_table(g, table.class_iri, sub).
StarPatternTable project(const rdf::Graph& g, const StarPatternTable& table,
                         const rdf::PropertyList& sub);

std::size_t multiplicity(const StarPatternTable& table, const ObjectTuple& tuple);
std::size_t multiplicity(const rdf::Graph& g, const StarPatternTable& table,
                         const std::vector<rdf::Term>& tuple);

/// Exact 1/M. Throws UndefinedValueError when M = 0.
Rational multiplicity_inverse(const StarPatternTable& table, const ObjectTuple& tuple);

/// ceil(sum of 1/M over matched entities). Computed exactly and checked
/// against the group count, which is what is returned.
std::int64_t ami(const StarPatternTable& table);

/// ami(project(g, table, sub)), computed from merged group sizes without
/// building the projected table.
std::int64_t projected_ami(const rdf::Graph& g, const StarPatternTable& table,
                           const rdf::PropertyList& sub);

/// AM(C): number of instances of the class.
std::int64_t instance_count(const rdf::Graph& g, const rdf::Term& cls);

// Edge-count objectives. `s` is the class's full canonical property list and
// `sp` a non-empty subset of it.

/// AMI(sp)*(|sp|+1) + AM*|s-sp|.
std::int64_t edges_value(std::int64_t ami, std::int64_t am, std::size_t s_size,
                       std::size_t sp_size);
/// AMI(sp)*|sp| + AM + AM*|s-sp|: edges of the factorized graph when type
/// edges are not counted.
std::int64_t factorized_edge_value(std::int64_t ami, std::int64_t am,
                                   std::size_t s_size, std::size_t sp_size);

std::int64_t edges_objective(const rdf::Graph& g, const rdf::Term& cls,
                       const rdf::PropertyList& s, const rdf::PropertyList& sp);
std::int64_t edges_factorized_count(const rdf::Graph& g, const rdf::Term& cls,
                                    const rdf::PropertyList& s,
                                    const rdf::PropertyList& sp);

struct Objective {
  rdf::PropertyList property_set;
  std::int64_t ami = 0;
  std::int64_t edges_value = 0;
  std::int64_t factorized_edge_count = 0;
};

Objective evaluate(const StarPatternTable& table, std::int64_t am, std::size_t s_size);
Objective evaluate(const rdf::PropertyList& sp, std::int64_t ami, std::int64_t am,
                   std::size_t s_size);

enum class EdgeConvention { with_type_edges, without_type_edges };

std::string_view to_string(EdgeConvention c);

/// Labeled edges of the class: triples whose subject is an instance of cls
/// (directly, or through instanceOf to a surrogate typed cls; surrogates
/// themselves count once) and whose predicate is in props, is instanceOf,
/// or is the type predicate under with_type_edges.
std::vector<rdf::IdTriple> labeled_edges(
    const rdf::Graph& g, const rdf::Term& cls, const rdf::PropertyList& props,
    EdgeConvention convention,
    const rdf::Term& instance_of = rdf::Term::iri(std::string(rdf::kDefaultInstanceOf)));

std::int64_t nle(const rdf::Graph& g, const rdf::Term& cls,
                 const rdf::PropertyList& props, EdgeConvention convention,
                 const rdf::Term& instance_of = rdf::Term::iri(std::string(rdf::kDefaultInstanceOf)));

/// Share (in percent) of the class's p-edges pointing at each object.
std::map<rdf::Term, double> repetition_histogram(const rdf::Graph& g,
                                                 const rdf::Term& cls,
                                                 const rdf::Term& p);

}  // namespace fsp::stats

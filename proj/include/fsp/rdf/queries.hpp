#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fsp/rdf/graph.hpp"

namespace fsp::rdf {

/// All s with (s type cls) in g, in canonical term order. Unknown classes
/// yield an empty set; its size is the class's instance count AM(C).
std::vector<Term> entities_of_class(const Graph& g, const Term& cls);

/// Predicates other than the type predicate used by at least one instance
/// of cls, in canonical order.
PropertyList class_properties(const Graph& g, const Term& cls);

/// Objects of `subject` under each property of `sp` (canonical, non-empty).
/// Absent when some property has no object; throws AssumptionViolation when
/// a property has more than one.
std::optional<std::vector<Term>> object_tuple(const Graph& g, const Term& subject,
                                              const PropertyList& sp);

// Id-level forms used by the mining code.

std::vector<TermId> property_ids(const Graph& g, const PropertyList& sp);
std::optional<std::vector<TermId>> object_tuple(const Graph& g, TermId subject,
                                                std::span<const TermId> sp);
/// Same, writing into `out` (resized to |sp|); returns false when incomplete.
bool object_tuple_into(const Graph& g, TermId subject, std::span<const TermId> sp,
                       std::vector<TermId>& out);

}  // namespace fsp::rdf

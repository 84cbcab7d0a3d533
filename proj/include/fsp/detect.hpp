#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "fsp/rdf/graph.hpp"
#include "fsp/star_stats.hpp"

namespace fsp::detect {

inline constexpr std::size_t kDefaultSubsetCap = 20;

/// Star-pattern tables for every subset of a class's properties with at
/// least two members, built by brute-force grouping over the graph.
struct PatternSpace {
  rdf::Term class_iri;
  rdf::PropertyList properties;
  std::map<rdf::PropertyList, stats::StarPatternTable> tables;
};

/// Throws PreconditionError when |s| exceeds `cap`; the message carries the
/// number of subsets that would have been built.
PatternSpace enumerate_pattern_space(const rdf::Graph& g, const rdf::Term& cls,
                                     const rdf::PropertyList& s,
                                     std::size_t cap = kDefaultSubsetCap);

struct TraceEntry {
  rdf::PropertyList subset;
  std::int64_t value = 0;  // objective used by the algorithm that visited it
  std::int64_t ami = 0;
};

struct DetectionResult {
  rdf::PropertyList best_properties;
  stats::StarPatternTable frequent_star_patterns;
  stats::Objective objective;
  std::vector<TraceEntry> trace;
  /// Candidate subsets scored (for the greedy search: children only).
  std::size_t candidate_evaluations = 0;
};

/// Exhaustive search. Visits subsets from |s| down to 2, canonical order
/// within one size, scoring each by factorized_edge_value; the first
/// minimum wins. Throws NoCandidateError on an empty space.
DetectionResult efsp(const PatternSpace& space, const rdf::Graph& g,
                     const rdf::Term& cls, const rdf::PropertyList& s);

struct GreedyOptions {
  /// Return as soon as a visited set has a single star pattern.
  bool stop_on_single_pattern = true;
};

/// Greedy descent on edges_value. Each round scores every child SP-{p} with at
/// least two properties, moves to the best child (earliest removed property
/// on ties) and stops once that child is strictly worse than SP. Children
/// are scored from the parent table's groups rather than rebuilt.
DetectionResult gfsp(const rdf::Graph& g, const rdf::Term& cls,
                     const rdf::PropertyList& s, GreedyOptions options = {});

struct Violation {
  enum class Kind { completeness, functionality };
  Kind kind;
  rdf::Term entity;
  rdf::Term property;
};

struct Diagnostics {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

Diagnostics check_assumptions(const rdf::Graph& g, const rdf::Term& cls,
                              const rdf::PropertyList& s);

/// Evaluates the pruning implication behind the greedy stop rule on one
/// chain sp2 ⊂ sp1 ⊂ sp ⊂ s:
///   edges(sp1) > edges(sp)  ==>  edges(sp2) >= edges(sp)
bool pruning_rule_holds(const rdf::Graph& g, const rdf::Term& cls,
                    const rdf::PropertyList& s, const rdf::PropertyList& sp,
                    const rdf::PropertyList& sp1, const rdf::PropertyList& sp2);

}  // namespace fsp::detect

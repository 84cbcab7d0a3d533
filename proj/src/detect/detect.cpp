#include "fsp/detect.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <limits>
#include <string>

#include "fsp/error.hpp"
#include "fsp/rdf/queries.hpp"

namespace fsp::detect {

namespace {

bool strict_subset(const rdf::PropertyList& sub, const rdf::PropertyList& super) {
  return sub.size() < super.size() &&
         std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

void require_canonical(const rdf::PropertyList& s) {
  if (!rdf::is_canonical(s)) throw PreconditionError("property list is not canonical");
}

rdf::PropertyList without(const rdf::PropertyList& sp, std::size_t index) {
  rdf::PropertyList out;
  out.reserve(sp.size() - 1);
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (i != index) out.push_back(sp[i]);
  }
  return out;
}

}  // namespace

PatternSpace enumerate_pattern_space(const rdf::Graph& g, const rdf::Term& cls,
                                     const rdf::PropertyList& s, std::size_t cap) {
  require_canonical(s);
  const std::size_t n = s.size();
  if (n > cap) {
    const std::string subsets =
        n < 63 ? std::to_string((std::uint64_t{1} << n) - n - 1)
               : "about 2^" + std::to_string(n);
    throw PreconditionError("refusing to enumerate " + std::to_string(n) +
                            " properties (cap " + std::to_string(cap) + "): " +
                            subsets + " subsets would be built");
  }
  PatternSpace space;
  space.class_iri = cls;
  space.properties = s;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    rdf::PropertyList subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(s[i]);
    }
    auto table = stats::build_star_table(g, cls, subset);
    space.tables.emplace(std::move(subset), std::move(table));
  }
  return space;
}

DetectionResult efsp(const PatternSpace& space, const rdf::Graph& g,
                     const rdf::Term& cls, const rdf::PropertyList& s) {
  require_canonical(s);
  if (space.properties != s || !(space.class_iri == cls)) {
    throw PreconditionError("pattern space was built for a different class or property set");
  }
  if (space.tables.empty()) {
    throw NoCandidateError("no property subset with at least two members for " +
                           cls.to_ntriples());
  }
  const std::int64_t am = stats::instance_count(g, cls);

  DetectionResult result;
  const stats::StarPatternTable* best = nullptr;
  std::int64_t min_edges = 0;
  for (std::size_t card = s.size(); card >= 2; --card) {
    for (const auto& [subset, table] : space.tables) {
      if (subset.size() != card) continue;
      const std::int64_t groups = stats::ami(table);
      const std::int64_t total =
          stats::factorized_edge_value(groups, am, s.size(), subset.size());
      result.trace.push_back({subset, total, groups});
      ++result.candidate_evaluations;
      if (best == nullptr || total < min_edges) {
        min_edges = total;
        best = &table;
      }
    }
  }
  result.best_properties = best->properties;
  result.frequent_star_patterns = *best;
  result.objective = stats::evaluate(*best, am, s.size());
  return result;
}

DetectionResult gfsp(const rdf::Graph& g, const rdf::Term& cls,
                     const rdf::PropertyList& s, GreedyOptions options) {
  require_canonical(s);
  if (s.size() < 2) {
    throw PreconditionError("greedy detection needs at least two properties");
  }
  const std::int64_t am = stats::instance_count(g, cls);

  DetectionResult result;
  stats::StarPatternTable table = stats::build_star_table(g, cls, s);
  stats::Objective current = stats::evaluate(table, am, s.size());
  result.trace.push_back({current.property_set, current.edges_value, current.ami});

  auto finish = [&](stats::StarPatternTable t, stats::Objective o) {
    result.best_properties = t.properties;
    result.frequent_star_patterns = std::move(t);
    result.objective = std::move(o);
    return std::move(result);
  };

  while (true) {
    if (options.stop_on_single_pattern && current.ami == 1) {
      return finish(std::move(table), std::move(current));
    }
    // The per-round best starts at +infinity; starting it at 0 would leave
    // the improvement branch unreachable.
    std::int64_t best_value = std::numeric_limits<std::int64_t>::max();
    std::optional<rdf::PropertyList> best_child;
    stats::Objective best_objective;
    for (std::size_t i = 0; i < table.properties.size(); ++i) {
      rdf::PropertyList child = without(table.properties, i);
      if (child.size() < 2) continue;
      // Children are scored from the parent's groups; only the one moved to
      // is materialized.
      stats::Objective child_objective =
          stats::evaluate(child, stats::projected_ami(g, table, child), am, s.size());
      ++result.candidate_evaluations;
      result.trace.push_back({child, child_objective.edges_value, child_objective.ami});
      if (options.stop_on_single_pattern && child_objective.ami == 1) {
        return finish(stats::project(g, table, child), std::move(child_objective));
      }
      if (child_objective.edges_value < best_value) {
        best_value = child_objective.edges_value;
        best_child = std::move(child);
        best_objective = std::move(child_objective);
      }
    }
    if (!best_child || best_value > current.edges_value) break;
    table = stats::project(g, table, *best_child);
    current = std::move(best_objective);
  }
  return finish(std::move(table), std::move(current));
}

Diagnostics check_assumptions(const rdf::Graph& g, const rdf::Term& cls,
                              const rdf::PropertyList& s) {
  Diagnostics d;
  auto cls_id = g.lookup(cls);
  if (!cls_id) return d;
  const std::vector<rdf::TermId> ids = rdf::property_ids(g, s);
  std::vector<rdf::TermId> instances(g.instances_of(*cls_id).begin(),
                                     g.instances_of(*cls_id).end());
  std::sort(instances.begin(), instances.end(), [&](rdf::TermId a, rdf::TermId b) {
    return g.term(a) < g.term(b);
  });
  for (rdf::TermId e : instances) {
    std::vector<std::size_t> counts(ids.size(), 0);
    for (const rdf::PredicateObject& edge : g.edges_of(e)) {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == edge.predicate) ++counts[i];
      }
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (counts[i] == 0) {
        d.violations.push_back({Violation::Kind::completeness, g.term(e), s[i]});
      } else if (counts[i] > 1) {
        d.violations.push_back({Violation::Kind::functionality, g.term(e), s[i]});
      }
    }
  }
  return d;
}

bool pruning_rule_holds(const rdf::Graph& g, const rdf::Term& cls,
                    const rdf::PropertyList& s, const rdf::PropertyList& sp,
                    const rdf::PropertyList& sp1, const rdf::PropertyList& sp2) {
  for (const auto* l : {&s, &sp, &sp1, &sp2}) require_canonical(*l);
  if (sp2.empty() || !strict_subset(sp2, sp1) || !strict_subset(sp1, sp) ||
      !strict_subset(sp, s)) {
    throw PreconditionError("expected a non-empty chain sp2 ⊂ sp1 ⊂ sp ⊂ s");
  }
  const std::int64_t base = stats::edges_objective(g, cls, s, sp);
  if (stats::edges_objective(g, cls, s, sp1) <= base) return true;
  return stats::edges_objective(g, cls, s, sp2) >= base;
}

}  // namespace fsp::detect

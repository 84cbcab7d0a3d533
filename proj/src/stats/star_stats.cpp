#include "fsp/star_stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "fsp/error.hpp"
#include "fsp/rdf/queries.hpp"

namespace fsp::stats {

namespace {

void require_subset(const rdf::PropertyList& s, const rdf::PropertyList& sp) {
  if (sp.empty()) throw PreconditionError("property subset must not be empty");
  if (!rdf::is_canonical(s) || !rdf::is_canonical(sp)) {
    throw PreconditionError("property lists must be canonical");
  }
  if (!std::includes(s.begin(), s.end(), sp.begin(), sp.end())) {
    throw PreconditionError("property subset is not contained in the class properties");
  }
}

std::vector<std::size_t> positions_in(const StarPatternTable& table,
                                      const rdf::PropertyList& sub) {
  if (!rdf::is_canonical(sub) || sub.empty() ||
      !std::includes(table.properties.begin(), table.properties.end(),
                     sub.begin(), sub.end())) {
    throw PreconditionError("projection target must be a non-empty canonical subset");
  }
  std::vector<std::size_t> positions;
  positions.reserve(sub.size());
  for (const rdf::Term& p : sub) {
    auto it = std::lower_bound(table.properties.begin(), table.properties.end(), p);
    positions.push_back(static_cast<std::size_t>(it - table.properties.begin()));
  }
  return positions;
}

// ceil(sum of 1/M over all entities) for groups of the given sizes. Every
// member of a group carries the same MI, so each group adds M * (1/M);
// summing per group keeps denominators bounded by the group size.
std::int64_t ami_from_sizes(const std::vector<std::size_t>& sizes) {
  Rational total(0);
  for (std::size_t size : sizes) {
    const auto m = static_cast<std::int64_t>(size);
    total += Rational(1, m) * m;
  }
  std::int64_t ceiling = total.numerator() / total.denominator();
  if (ceiling * total.denominator() < total.numerator()) ++ceiling;
  const auto groups = static_cast<std::int64_t>(sizes.size());
  if (ceiling != groups) {
    throw std::logic_error("AMI diverges from the star-pattern count");
  }
  return groups;
}

}  // namespace

std::size_t StarPatternTable::matched() const {
  std::size_t n = 0;
  for (const auto& [tuple, entities] : groups) n += entities.size();
  return n;
}

StarPatternTable build_star_table(const rdf::Graph& g, const rdf::Term& cls,
                                  const rdf::PropertyList& sp, bool strict) {
  if (sp.empty()) throw PreconditionError("property list must not be empty");
  if (!rdf::is_canonical(sp)) throw PreconditionError("property list is not canonical");
  StarPatternTable table;
  table.class_iri = cls;
  table.properties = sp;
  table.property_ids = rdf::property_ids(g, sp);
  auto cls_id = g.lookup(cls);
  if (!cls_id) return table;
  ObjectTuple tuple;
  for (rdf::TermId s : g.instances_of(*cls_id)) {
    if (!rdf::object_tuple_into(g, s, table.property_ids, tuple)) {
      table.skipped.push_back(s);
      continue;
    }
    auto it = table.groups.find(tuple);
    if (it == table.groups.end()) it = table.groups.emplace(tuple, std::vector<rdf::TermId>{}).first;
    it->second.push_back(s);
  }
  if (strict && !table.skipped.empty()) {
    throw AssumptionViolation(
        "completeness violated: " + std::to_string(table.skipped.size()) +
        " instance(s) of " + cls.to_ntriples() + " lack some property, e.g. " +
        g.term(table.skipped.front()).to_ntriples());
  }
  return table;
}

StarPatternTable project(const rdf::Graph& g, const StarPatternTable& table,
                         const rdf::PropertyList& sub) {
  const std::vector<std::size_t> positions = positions_in(table, sub);

  StarPatternTable out;
  out.class_iri = table.class_iri;
  out.properties = sub;
  for (std::size_t i : positions) out.property_ids.push_back(table.property_ids[i]);

  // Project every parent key, sort, then merge runs of equal keys; the
  // output map is filled in key order so each insert is amortized O(1).
  using Source = const std::vector<rdf::TermId>*;
  std::vector<std::pair<ObjectTuple, Source>> projected;
  projected.reserve(table.groups.size());
  for (const auto& [tuple, entities] : table.groups) {
    ObjectTuple key(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) key[i] = tuple[positions[i]];
    projected.emplace_back(std::move(key), &entities);
  }
  std::sort(projected.begin(), projected.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t lo = 0; lo < projected.size();) {
    std::size_t hi = lo, total = 0;
    for (; hi < projected.size() && projected[hi].first == projected[lo].first; ++hi) {
      total += projected[hi].second->size();
    }
    std::vector<rdf::TermId> members;
    members.reserve(total);
    for (std::size_t i = lo; i < hi; ++i) {
      members.insert(members.end(), projected[i].second->begin(), projected[i].second->end());
    }
    out.groups.emplace_hint(out.groups.end(), std::move(projected[lo].first), std::move(members));
    lo = hi;
  }
  for (rdf::TermId s : table.skipped) {
    if (auto tuple = rdf::object_tuple(g, s, out.property_ids)) {
      out.groups[std::move(*tuple)].push_back(s);
    } else {
      out.skipped.push_back(s);
    }
  }
  return out;
}

std::size_t multiplicity(const StarPatternTable& table, const ObjectTuple& tuple) {
  auto it = table.groups.find(tuple);
  return it == table.groups.end() ? 0 : it->second.size();
}

std::size_t multiplicity(const rdf::Graph& g, const StarPatternTable& table,
                         const std::vector<rdf::Term>& tuple) {
  ObjectTuple ids;
  ids.reserve(tuple.size());
  for (const rdf::Term& t : tuple) {
    auto id = g.lookup(t);
    if (!id) return 0;
    ids.push_back(*id);
  }
  return multiplicity(table, ids);
}

Rational multiplicity_inverse(const StarPatternTable& table, const ObjectTuple& tuple) {
  std::size_t m = multiplicity(table, tuple);
  if (m == 0) throw UndefinedValueError("multiplicity inverse of an unmatched tuple");
  return Rational(1, static_cast<std::int64_t>(m));
}

std::int64_t ami(const StarPatternTable& table) {
  std::vector<std::size_t> sizes;
  sizes.reserve(table.groups.size());
  for (const auto& [tuple, entities] : table.groups) sizes.push_back(entities.size());
  return ami_from_sizes(sizes);
}

std::int64_t projected_ami(const rdf::Graph& g, const StarPatternTable& table,
                           const rdf::PropertyList& sub) {
  const std::vector<std::size_t> positions = positions_in(table, sub);
  const std::size_t k = positions.size();

  // Projected keys laid out flat, k ids per row, with the row's entity count.
  std::vector<rdf::TermId> keys;
  std::vector<std::size_t> weights;
  keys.reserve(table.groups.size() * k);
  weights.reserve(table.groups.size());
  for (const auto& [tuple, entities] : table.groups) {
    for (std::size_t i : positions) keys.push_back(tuple[i]);
    weights.push_back(entities.size());
  }
  std::vector<rdf::TermId> ids;
  for (std::size_t i : positions) ids.push_back(table.property_ids[i]);
  for (rdf::TermId s : table.skipped) {
    if (auto tuple = rdf::object_tuple(g, s, ids)) {
      keys.insert(keys.end(), tuple->begin(), tuple->end());
      weights.push_back(1);
    }
  }

  auto row = [&](std::size_t r) { return keys.begin() + static_cast<std::ptrdiff_t>(r * k); };
  auto same = [&](std::size_t a, std::size_t b) {
    return std::equal(row(a), row(a) + k, row(b));
  };
  // Open-addressing table from key to its slot in `sizes`.
  std::size_t capacity = 16;
  while (capacity < 2 * weights.size()) capacity *= 2;
  constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_row(capacity, kEmpty);
  std::vector<std::size_t> slot_of(capacity);
  std::vector<std::size_t> sizes;
  for (std::size_t r = 0; r < weights.size(); ++r) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto it = row(r); it != row(r) + k; ++it) h = (h ^ *it) * 0x100000001b3ULL;
    h ^= h >> 32;
    std::size_t b = static_cast<std::size_t>(h) & (capacity - 1);
    while (first_row[b] != kEmpty && !same(first_row[b], r)) b = (b + 1) & (capacity - 1);
    if (first_row[b] == kEmpty) {
      first_row[b] = r;
      slot_of[b] = sizes.size();
      sizes.push_back(0);
    }
    sizes[slot_of[b]] += weights[r];
  }
  return ami_from_sizes(sizes);
}

std::int64_t instance_count(const rdf::Graph& g, const rdf::Term& cls) {
  auto id = g.lookup(cls);
  return id ? static_cast<std::int64_t>(g.instances_of(*id).size()) : 0;
}

std::int64_t edges_value(std::int64_t ami, std::int64_t am, std::size_t s_size,
                       std::size_t sp_size) {
  return ami * static_cast<std::int64_t>(sp_size + 1) +
         am * static_cast<std::int64_t>(s_size - sp_size);
}

std::int64_t factorized_edge_value(std::int64_t ami, std::int64_t am,
                                   std::size_t s_size, std::size_t sp_size) {
  return ami * static_cast<std::int64_t>(sp_size) + am +
         am * static_cast<std::int64_t>(s_size - sp_size);
}

std::int64_t edges_objective(const rdf::Graph& g, const rdf::Term& cls,
                       const rdf::PropertyList& s, const rdf::PropertyList& sp) {
  require_subset(s, sp);
  return edges_value(ami(build_star_table(g, cls, sp)), instance_count(g, cls),
                   s.size(), sp.size());
}

std::int64_t edges_factorized_count(const rdf::Graph& g, const rdf::Term& cls,
                                    const rdf::PropertyList& s,
                                    const rdf::PropertyList& sp) {
  require_subset(s, sp);
  return factorized_edge_value(ami(build_star_table(g, cls, sp)),
                               instance_count(g, cls), s.size(), sp.size());
}

Objective evaluate(const StarPatternTable& table, std::int64_t am, std::size_t s_size) {
  return evaluate(table.properties, ami(table), am, s_size);
}

Objective evaluate(const rdf::PropertyList& sp, std::int64_t ami, std::int64_t am,
                   std::size_t s_size) {
  Objective o;
  o.property_set = sp;
  o.ami = ami;
  o.edges_value = edges_value(ami, am, s_size, sp.size());
  o.factorized_edge_count = factorized_edge_value(ami, am, s_size, sp.size());
  return o;
}

std::string_view to_string(EdgeConvention c) {
  return c == EdgeConvention::with_type_edges ? "with-type" : "without-type";
}

std::vector<rdf::IdTriple> labeled_edges(const rdf::Graph& g, const rdf::Term& cls,
                                         const rdf::PropertyList& props,
                                         EdgeConvention convention,
                                         const rdf::Term& instance_of) {
  std::vector<rdf::IdTriple> out;
  auto cls_id = g.lookup(cls);
  if (!cls_id) return out;
  auto inst_id = g.lookup(instance_of);

  std::unordered_set<rdf::TermId> counted;
  for (const rdf::Term& p : props) {
    if (auto id = g.lookup(p)) counted.insert(*id);
  }
  if (inst_id) counted.insert(*inst_id);
  if (convention == EdgeConvention::with_type_edges) {
    counted.insert(g.type_predicate_id());
  }

  std::vector<rdf::TermId> subjects;
  std::unordered_set<rdf::TermId> seen;
  for (rdf::TermId s : g.instances_of(*cls_id)) {
    if (seen.insert(s).second) subjects.push_back(s);
    if (!inst_id) continue;
    for (rdf::TermId member : g.subjects_with(*inst_id, s)) {
      if (seen.insert(member).second) subjects.push_back(member);
    }
  }
  for (rdf::TermId s : subjects) {
    for (const rdf::PredicateObject& e : g.edges_of(s)) {
      if (counted.contains(e.predicate)) out.push_back({s, e.predicate, e.object});
    }
  }
  return out;
}

std::int64_t nle(const rdf::Graph& g, const rdf::Term& cls, const rdf::PropertyList& props,
                 EdgeConvention convention, const rdf::Term& instance_of) {
  return static_cast<std::int64_t>(
      labeled_edges(g, cls, props, convention, instance_of).size());
}

std::map<rdf::Term, double> repetition_histogram(const rdf::Graph& g,
                                                 const rdf::Term& cls,
                                                 const rdf::Term& p) {
  std::map<rdf::Term, double> out;
  auto cls_id = g.lookup(cls);
  auto p_id = g.lookup(p);
  if (!cls_id || !p_id) return out;
  std::map<rdf::TermId, std::size_t> counts;
  std::size_t total = 0;
  for (rdf::TermId s : g.instances_of(*cls_id)) {
    for (const rdf::PredicateObject& e : g.edges_of(s)) {
      if (e.predicate != *p_id) continue;
      ++counts[e.object];
      ++total;
    }
  }
  for (const auto& [o, n] : counts) {
    out[g.term(o)] = 100.0 * static_cast<double>(n) / static_cast<double>(total);
  }
  return out;
}

}  // namespace fsp::stats

#include "fsp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "fsp/error.hpp"

namespace fsp::gen {

namespace {

std::string pad(std::size_t value, std::size_t width) {
  std::string s = std::to_string(value);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

std::size_t digits(std::size_t n) { return std::to_string(n).size(); }

}  // namespace

std::string class_iri(const GeneratorSpec& spec) { return spec.base_iri + "Measurement"; }

std::string property_iri(const GeneratorSpec& spec, std::size_t index) {
  return spec.base_iri + "p" + pad(index, digits(spec.num_properties));
}

std::size_t distinct_tuples(const GeneratorSpec& spec) {
  const double t = std::round((1.0 - spec.repetition_skew) *
                              static_cast<double>(spec.num_entities));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

void validate(const GeneratorSpec& spec) {
  if (spec.num_entities == 0 || spec.num_properties == 0 || spec.value_cardinality == 0) {
    throw PreconditionError("entity, property and value counts must be at least 1");
  }
  if (!(spec.repetition_skew >= 0.0 && spec.repetition_skew <= 1.0)) {
    throw PreconditionError("repetition skew must lie in [0, 1]");
  }
  const std::size_t needed = distinct_tuples(spec);
  std::size_t capacity = 1;
  for (std::size_t i = 0; i < spec.num_properties && capacity < needed; ++i) {
    capacity *= spec.value_cardinality;
  }
  if (capacity < needed) {
    throw PreconditionError(std::to_string(spec.value_cardinality) + "^" +
                            std::to_string(spec.num_properties) + " objects cannot form " +
                            std::to_string(needed) + " distinct tuples");
  }
}

rdf::Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  validate(spec);
  std::mt19937_64 rng(seed);
  const std::size_t n = spec.num_entities;
  const std::size_t p = spec.num_properties;
  const std::size_t v = spec.value_cardinality;
  const std::size_t tuples = distinct_tuples(spec);

  // Tuple t is written in base v; property j reads digit position_of[j]
  // and relabels it through its own value permutation.
  std::vector<std::size_t> position_of(p);
  std::iota(position_of.begin(), position_of.end(), 0);
  std::shuffle(position_of.begin(), position_of.end(), rng);
  std::vector<std::vector<std::size_t>> label(p, std::vector<std::size_t>(v));
  for (auto& l : label) {
    std::iota(l.begin(), l.end(), 0);
    std::shuffle(l.begin(), l.end(), rng);
  }

  // Every tuple is used at least once; the rest are drawn uniformly.
  std::vector<std::size_t> assignment(n);
  std::uniform_int_distribution<std::size_t> pick(0, tuples - 1);
  for (std::size_t i = 0; i < n; ++i) assignment[i] = i < tuples ? i : pick(rng);
  std::shuffle(assignment.begin(), assignment.end(), rng);

  std::vector<std::size_t> place(p, 1);
  for (std::size_t d = 1; d < p; ++d) {
    place[d] = place[d - 1] > tuples ? place[d - 1] : place[d - 1] * v;
  }

  rdf::Graph g;
  const rdf::TermId type = g.type_predicate_id();
  const rdf::TermId cls = g.intern(rdf::Term::iri(class_iri(spec)));
  std::vector<rdf::TermId> props(p);
  std::vector<std::vector<rdf::TermId>> values(p, std::vector<rdf::TermId>(v));
  for (std::size_t j = 0; j < p; ++j) {
    props[j] = g.intern(rdf::Term::iri(property_iri(spec, j)));
    for (std::size_t k = 0; k < v; ++k) {
      values[j][k] = g.intern(rdf::Term::iri(property_iri(spec, j) + "/v" +
                                             pad(k, digits(v))));
    }
  }
  const std::size_t width = digits(n);
  for (std::size_t i = 0; i < n; ++i) {
    const rdf::TermId e = g.intern(rdf::Term::iri(spec.base_iri + "m" + pad(i, width)));
    g.insert(e, type, cls);
    for (std::size_t j = 0; j < p; ++j) {
      const std::size_t digit = (assignment[i] / place[position_of[j]]) % v;
      g.insert(e, props[j], values[j][label[j][digit]]);
    }
  }
  return g;
}

}  // namespace fsp::gen

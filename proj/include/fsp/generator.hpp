#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "fsp/rdf/graph.hpp"

namespace fsp::gen {

/// Shape of a synthetic sensor-style dataset: one class whose instances each
/// carry exactly one object per property.
struct GeneratorSpec {
  std::size_t num_entities = 1000;
  std::size_t num_properties = 5;
  /// 0 gives every entity its own object tuple, 1 a single shared tuple;
  /// in between, round((1 - skew) * num_entities) distinct tuples are used.
  double repetition_skew = 0.5;
  /// Distinct objects available per property.
  std::size_t value_cardinality = 10;
  std::string base_iri = "http://example.org/sensor/";
};

std::string class_iri(const GeneratorSpec& spec);
std::string property_iri(const GeneratorSpec& spec, std::size_t index);

/// Number of distinct object tuples the generator will emit.
std::size_t distinct_tuples(const GeneratorSpec& spec);

/// Throws PreconditionError on zero counts, a skew outside [0, 1], or a
/// value cardinality too small to realize the requested distinct tuples.
void validate(const GeneratorSpec& spec);

/// Deterministic in (spec, seed). Emits num_entities type edges and
/// num_entities edges per property.
rdf::Graph generate(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace fsp::gen

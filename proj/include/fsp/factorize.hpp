#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsp/rdf/graph.hpp"
#include "fsp/star_stats.hpp"

namespace fsp::factor {

/// Partial map from class instances to surrogates. Instances without a full
/// object tuple over `properties` are absent.
struct EntityMapping {
  rdf::Term class_iri;
  rdf::PropertyList properties;
  std::map<rdf::Term, rdf::Term> pairs;

  std::size_t surrogate_count() const;
};

/// `urn:fsp:` followed by 16 hex digits of a stable 64-bit hash over the
/// class IRI and the (property, object) pairs.
rdf::Term surrogate_iri(const rdf::Term& cls, const rdf::PropertyList& sp,
                        const std::vector<rdf::Term>& objects);

EntityMapping build_mapping(const rdf::Graph& g, const rdf::Term& cls,
                            const rdf::PropertyList& sp);

struct Options {
  rdf::Term instance_of = rdf::Term::iri(std::string(rdf::kDefaultInstanceOf));
};

struct Factorization {
  rdf::Graph graph;
  EntityMapping mapping;
  std::vector<std::string> warnings;
};

/// Replaces the star patterns of `cls` over `sp` with compact molecules:
///   (s type C)  -> (s instanceOf sg), (sg type C)
///   (s p o), p in sp -> (sg p o)
/// Every other triple is copied unchanged.
Factorization factorize(const rdf::Graph& g, const rdf::Term& cls,
                        const rdf::PropertyList& sp, const Options& options = {});

/// Inverse of factorize: pushes every surrogate's edges down to its members
/// and drops surrogates and instanceOf edges. Surrogates are the objects of
/// instanceOf edges plus those named by `hint`. Throws IntegrityError when an
/// entity has two surrogates or a surrogate has no edges.
rdf::Graph expand(const rdf::Graph& factorized, const EntityMapping* hint = nullptr,
                  const Options& options = {});

/// The mapping as an RDF document of instanceOf triples.
rdf::Graph mapping_graph(const EntityMapping& mapping, const Options& options = {});

struct FactorizationReport {
  stats::EdgeConvention convention = stats::EdgeConvention::with_type_edges;
  std::int64_t nn_before = 0;
  std::int64_t nn_after = 0;
  std::int64_t nle_before = 0;
  std::int64_t nle_after = 0;
  /// 100 * (before - after) / before; negative when factorizing adds edges.
  double percent_savings = 0.0;
};

/// Throws UndefinedValueError when the original has no labeled edges.
FactorizationReport report(const rdf::Graph& original, const rdf::Graph& factorized,
                           const rdf::Term& cls, const rdf::PropertyList& s,
                           stats::EdgeConvention convention,
                           const Options& options = {});

}  // namespace fsp::factor

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fsp/cli.hpp"

int main(int argc, char** argv) {
  using fsp::cli::Algorithm;
  using fsp::stats::EdgeConvention;

  CLI::App app{"Frequent star pattern detection and RDF graph factorization"};
  app.require_subcommand(1);

  fsp::cli::RunConfig config;
  std::vector<std::string> properties;
  std::string convention = "with-type";

  const std::map<std::string, Algorithm> algorithms{{"efsp", Algorithm::efsp},
                                                    {"gfsp", Algorithm::gfsp}};
  const std::map<std::string, EdgeConvention> conventions{
      {"with-type", EdgeConvention::with_type_edges},
      {"without-type", EdgeConvention::without_type_edges}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", config.input_path, "N-Triples input ('-' for stdin)");
    cmd->add_option("--type-predicate", config.type_predicate, "IRI used as rdf:type");
    cmd->add_option("--instance-of", config.instance_of, "IRI of the instanceOf predicate");
  };
  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--class", config.class_iri, "class IRI")->required();
    cmd->add_option("--properties", properties, "comma-separated property IRIs")
        ->delimiter(',');
    cmd->add_option("--algorithm", config.algorithm, "efsp or gfsp")
        ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
    cmd->add_option("--convention", convention, "with-type or without-type")
        ->check(CLI::IsMember(conventions, CLI::ignore_case));
    cmd->add_flag("--strict", config.strict_assumptions,
                  "fail when an entity is incomplete or non-functional");
    cmd->add_option("--subset-cap", config.subset_cap,
                    "largest property set the exhaustive search will enumerate");
  };

  auto* detect = app.add_subcommand("detect", "find the frequent star patterns of a class");
  add_common(detect);
  add_search(detect);

  auto* factorize = app.add_subcommand("factorize", "replace frequent star patterns by surrogates");
  add_common(factorize);
  add_search(factorize);
  factorize->add_option("--output", config.output_path, "factorized N-Triples ('-' for stdout)");
  factorize->add_option("--mapping", config.mapping_path, "entity-to-surrogate mapping file");

  auto* expand = app.add_subcommand("expand", "restore the original graph from a factorized one");
  add_common(expand);
  expand->add_option("--output", config.output_path, "expanded N-Triples ('-' for stdout)");
  expand->add_option("--mapping", config.mapping_path, "mapping file written by factorize");

  auto* stats = app.add_subcommand("stats", "per-class counts and repetition histograms");
  add_common(stats);
  stats->add_option("--class", config.class_iri, "restrict to one class");
  stats->add_option("--top", config.top_k, "histogram entries per property");

  auto* generate = app.add_subcommand("generate", "write a synthetic sensor-style dataset");
  generate->add_option("--output", config.output_path, "N-Triples output ('-' for stdout)");
  generate->add_option("--seed", config.seed, "random seed");
  generate->add_option("--entities", config.generator.num_entities, "number of entities");
  generate->add_option("--num-properties", config.generator.num_properties,
                       "properties per entity");
  generate->add_option("--skew", config.generator.repetition_skew,
                       "0 = all tuples unique, 1 = one shared tuple");
  generate->add_option("--cardinality", config.generator.value_cardinality,
                       "distinct objects per property");
  generate->add_option("--base-iri", config.generator.base_iri, "IRI prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : fsp::cli::kParseError;
  }
  if (!properties.empty()) config.properties = properties;
  std::transform(convention.begin(), convention.end(), convention.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  config.convention = conventions.at(convention);

  if (detect->parsed()) return fsp::cli::cmd_detect(config, std::cout, std::cerr);
  if (factorize->parsed()) return fsp::cli::cmd_factorize(config, std::cout, std::cerr);
  if (expand->parsed()) return fsp::cli::cmd_expand(config, std::cout, std::cerr);
  if (stats->parsed()) return fsp::cli::cmd_stats(config, std::cout, std::cerr);
  return fsp::cli::cmd_generate(config, std::cout, std::cerr);
}

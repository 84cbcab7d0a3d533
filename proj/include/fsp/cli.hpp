#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fsp/detect.hpp"
#include "fsp/generator.hpp"
#include "fsp/star_stats.hpp"

namespace fsp::cli {

/// Process exit codes. Stable; scripts depend on them.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kAssumptionViolation = 3,
  kNoCandidate = 4,
  kIoError = 5,
  kIntegrityError = 6,
};

enum class Algorithm { efsp, gfsp };

struct RunConfig {
  std::string input_path = "-";
  std::string output_path;
  std::string mapping_path;
  std::string class_iri;
  std::optional<std::vector<std::string>> properties;
  Algorithm algorithm = Algorithm::gfsp;
  stats::EdgeConvention convention = stats::EdgeConvention::with_type_edges;
  bool strict_assumptions = false;
  std::uint64_t seed = 0;
  std::size_t subset_cap = detect::kDefaultSubsetCap;
  std::size_t top_k = 10;
  std::string type_predicate{rdf::kRdfType};
  std::string instance_of{rdf::kDefaultInstanceOf};
  gen::GeneratorSpec generator;
};

// Each command writes a human-readable report followed by one JSON object on
// its own line to `out`, diagnostics to `err`, and returns an ExitCode.

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_factorize(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_expand(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes to a sibling temp file and renames it over `path`; "-" or an empty
/// path goes to `out` instead. Throws IoError.
void write_atomically(const std::string& path, const std::string& content,
                      std::ostream& out);

}  // namespace fsp::cli

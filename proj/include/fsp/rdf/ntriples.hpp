#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "fsp/rdf/graph.hpp"

namespace fsp::rdf {

/// Line-oriented N-Triples reader. Accepts LF or CRLF, `#` comment lines
/// and blank lines; throws ParseError with the 1-based line and column of
/// the first malformed line.
Graph parse_ntriples(std::istream& in,
                     Term type_predicate = Term::iri(std::string(kRdfType)));
Graph parse_ntriples(std::string_view text,
                     Term type_predicate = Term::iri(std::string(kRdfType)));

/// One LF-terminated line per triple, sorted by (subject, predicate, object)
/// surface text.
void serialize_ntriples(const Graph& g, std::ostream& out);
std::string serialize_ntriples(const Graph& g);

}  // namespace fsp::rdf

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsp::rdf {

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

/// Functional predicate linking an entity to its surrogate.
inline constexpr std::string_view kDefaultInstanceOf = "urn:fsp:instanceOf";

enum class TermKind : std::uint8_t { iri, blank, literal };

/// An IRI, blank node or literal. IRIs are stored without angle brackets,
/// blank nodes without the `_:` prefix, literals unescaped.
class Term {
 public:
  Term() = default;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string language = {});

  TermKind kind() const noexcept { return kind_; }
  const std::string& lexical() const noexcept { return lexical_; }
  const std::string& datatype() const noexcept { return datatype_; }
  const std::string& language() const noexcept { return language_; }

  bool is_iri() const noexcept { return kind_ == TermKind::iri; }
  bool is_blank() const noexcept { return kind_ == TermKind::blank; }
  bool is_literal() const noexcept { return kind_ == TermKind::literal; }

  /// N-Triples surface form, e.g. `<urn:x>`, `_:b0`, `"a\"b"@en`.
  std::string to_ntriples() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  TermKind kind_ = TermKind::iri;
  std::string lexical_;
  std::string datatype_;
  std::string language_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Properties are kept sorted by IRI; every formula downstream is
/// order-independent, so this is the one canonical order.
using PropertyList = std::vector<Term>;

PropertyList canonical(PropertyList properties);
bool is_canonical(const PropertyList& properties);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&,
                                          const Triple&) = default;
};

/// Throws PreconditionError if the subject is a literal or the predicate is
/// not an IRI.
void validate(const Triple& t);

std::string to_ntriples(const Triple& t);

}  // namespace fsp::rdf

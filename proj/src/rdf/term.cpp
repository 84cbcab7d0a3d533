#include "fsp/rdf/term.hpp"

#include <algorithm>
#include <functional>

#include "fsp/error.hpp"

namespace fsp::rdf {

namespace {

void append_escaped_literal(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
}

}  // namespace

Term Term::iri(std::string value) {
  if (value.empty()) throw PreconditionError("IRI must not be empty");
  Term t;
  t.kind_ = TermKind::iri;
  t.lexical_ = std::move(value);
  return t;
}

Term Term::blank(std::string label) {
  if (label.empty()) throw PreconditionError("blank node label must not be empty");
  Term t;
  t.kind_ = TermKind::blank;
  t.lexical_ = std::move(label);
  return t;
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string language) {
  if (!datatype.empty() && !language.empty()) {
    throw PreconditionError("literal cannot carry both datatype and language");
  }
  Term t;
  t.kind_ = TermKind::literal;
  t.lexical_ = std::move(lexical);
  t.datatype_ = std::move(datatype);
  t.language_ = std::move(language);
  return t;
}

std::string Term::to_ntriples() const {
  std::string out;
  switch (kind_) {
    case TermKind::iri:
      out.reserve(lexical_.size() + 2);
      out += '<';
      out += lexical_;
      out += '>';
      break;
    case TermKind::blank:
      out = "_:" + lexical_;
      break;
    case TermKind::literal:
      out += '"';
      append_escaped_literal(out, lexical_);
      out += '"';
      if (!datatype_.empty()) {
        out += "^^<";
        out += datatype_;
        out += '>';
      } else if (!language_.empty()) {
        out += '@';
        out += language_;
      }
      break;
  }
  return out;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.lexical());
  h ^= static_cast<std::size_t>(t.kind()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (!t.datatype().empty()) h ^= std::hash<std::string>{}(t.datatype()) * 31;
  if (!t.language().empty()) h ^= std::hash<std::string>{}(t.language()) * 131;
  return h;
}

PropertyList canonical(PropertyList properties) {
  std::sort(properties.begin(), properties.end());
  properties.erase(std::unique(properties.begin(), properties.end()),
                   properties.end());
  return properties;
}

bool is_canonical(const PropertyList& properties) {
  return std::adjacent_find(properties.begin(), properties.end(),
                            std::greater_equal<>{}) == properties.end();
}

void validate(const Triple& t) {
  if (t.subject.is_literal()) {
    throw PreconditionError("literal in subject position: " + to_ntriples(t));
  }
  if (!t.predicate.is_iri()) {
    throw PreconditionError("predicate must be an IRI: " + to_ntriples(t));
  }
}

std::string to_ntriples(const Triple& t) {
  return t.subject.to_ntriples() + ' ' + t.predicate.to_ntriples() + ' ' +
         t.object.to_ntriples() + " .";
}

}  // namespace fsp::rdf

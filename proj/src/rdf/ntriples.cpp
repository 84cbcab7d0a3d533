#include "fsp/rdf/ntriples.hpp"

#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "fsp/error.hpp"

namespace fsp::rdf {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  Triple parse() {
    skip_space();
    if (peek() == '"') fail("literal in subject position");
    Term subject = parse_resource("subject");
    require_space();
    if (peek() != '<') fail("predicate must be an IRI");
    Term predicate = parse_iri();
    require_space();
    Term object = parse_object();
    skip_space();
    if (peek() != '.') fail("missing terminating '.'");
    ++pos_;
    skip_space();
    if (!at_end() && peek() != '#') fail("unexpected trailing content");
    return Triple{std::move(subject), std::move(predicate), std::move(object)};
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, pos_ + 1);
  }

  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[pos_]; }

  void skip_space() {
    while (!at_end() && is_space(line_[pos_])) ++pos_;
  }

  void require_space() {
    if (at_end() || !is_space(peek())) fail("expected whitespace");
    skip_space();
  }

  Term parse_resource(const char* role) {
    if (peek() == '<') return parse_iri();
    if (peek() == '_') return parse_blank();
    fail(std::string("expected IRI or blank node as ") + role);
  }

  Term parse_iri() {
    std::size_t start = ++pos_;
    while (!at_end() && line_[pos_] != '>') {
      char c = line_[pos_];
      if (is_space(c) || c == '<' || c == '"') fail("unbalanced '<' in IRI");
      ++pos_;
    }
    if (at_end()) fail("unbalanced '<' in IRI");
    std::string value(line_.substr(start, pos_ - start));
    ++pos_;
    if (value.empty()) fail("empty IRI");
    if (value.find(':') == std::string::npos) fail("IRI is not absolute: " + value);
    return Term::iri(std::move(value));
  }

  Term parse_blank() {
    if (line_.substr(pos_, 2) != "_:") fail("malformed blank node");
    pos_ += 2;
    std::size_t start = pos_;
    while (!at_end() && !is_space(line_[pos_])) ++pos_;
    // A label may not end in '.', so `_:b.` is the label `b` and the terminator.
    while (pos_ > start && line_[pos_ - 1] == '.') --pos_;
    if (pos_ == start) fail("empty blank node label");
    return Term::blank(std::string(line_.substr(start, pos_ - start)));
  }

  Term parse_object() {
    if (peek() == '"') return parse_literal();
    return parse_resource("object");
  }

  std::uint32_t parse_hex(std::size_t digits) {
    if (pos_ + digits > line_.size()) fail("truncated unicode escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char c = line_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      else fail("bad hex digit in unicode escape");
    }
    return cp;
  }

  Term parse_literal() {
    ++pos_;
    std::string lexical;
    bool closed = false;
    while (!at_end()) {
      char c = line_[pos_++];
      if (c == '"') {
        closed = true;
        break;
      }
      if (c != '\\') {
        lexical += c;
        continue;
      }
      if (at_end()) break;
      char e = line_[pos_++];
      switch (e) {
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 'f': lexical += '\f'; break;
        case '"': lexical += '"'; break;
        case '\'': lexical += '\''; break;
        case '\\': lexical += '\\'; break;
        case 'u': append_utf8(lexical, parse_hex(4)); break;
        case 'U': append_utf8(lexical, parse_hex(8)); break;
        default: fail(std::string("unknown escape \\") + e);
      }
    }
    if (!closed) fail("unbalanced '\"' in literal");
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (peek() != '<') fail("datatype must be an IRI");
      Term dt = parse_iri();
      return Term::literal(std::move(lexical), dt.lexical());
    }
    if (peek() == '@') {
      std::size_t start = ++pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                           line_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) fail("empty language tag");
      return Term::literal(std::move(lexical), {},
                           std::string(line_.substr(start, pos_ - start)));
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

bool is_blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (is_space(c)) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

Graph parse_ntriples(std::istream& in, Term type_predicate) {
  Graph g(std::move(type_predicate));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank_or_comment(line)) continue;
    g.insert(LineParser(line, line_no).parse());
  }
  return g;
}

Graph parse_ntriples(std::string_view text, Term type_predicate) {
  std::istringstream in{std::string(text)};
  return parse_ntriples(in, std::move(type_predicate));
}

void serialize_ntriples(const Graph& g, std::ostream& out) {
  for (const Triple& t : g.sorted_triples()) out << to_ntriples(t) << '\n';
}

std::string serialize_ntriples(const Graph& g) {
  std::ostringstream out;
  serialize_ntriples(g, out);
  return out.str();
}

}  // namespace fsp::rdf

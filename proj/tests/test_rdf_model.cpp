#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fsp/error.hpp"
#include "fsp/rdf/ntriples.hpp"
#include "fsp/rdf/queries.hpp"
#include "support/fixtures.hpp"

namespace fsp::rdf {
namespace {

using fsp::testing::iri;
using fsp::testing::props;

Graph random_graph(std::mt19937_64& rng) {
  auto pick = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi)(rng);
  };
  static const std::vector<std::string> lexicals = {
      "plain", "with \"quotes\"", "back\\slash", "line\nbreak", "tab\there",
      "caf\xC3\xA9", "", "cr\rhere", "  spaced  "};
  auto resource = [&]() {
    return pick(3) == 0 ? Term::blank("b" + std::to_string(pick(5)))
                        : Term::iri("urn:r:" + std::to_string(pick(20)));
  };
  Graph g;
  const std::size_t n = pick(60);
  for (std::size_t i = 0; i < n; ++i) {
    Term object;
    switch (pick(4)) {
      case 0: object = resource(); break;
      case 1: object = Term::literal(lexicals[pick(lexicals.size() - 1)]); break;
      case 2: object = Term::literal(std::to_string(pick(9)),
                                     "http://www.w3.org/2001/XMLSchema#integer"); break;
      case 3: object = Term::literal(lexicals[pick(2)], {}, pick(1) ? "en" : "de-CH"); break;
      default: object = Term::iri(std::string(kRdfType));
    }
    g.insert({resource(), Term::iri("urn:p:" + std::to_string(pick(4))), object});
  }
  return g;
}

TEST(NTriplesParse, SingleLine) {
  Graph g = parse_ntriples("<urn:c1> <urn:p1> <urn:e1> .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains({Term::iri("urn:c1"), Term::iri("urn:p1"), Term::iri("urn:e1")}));
}

TEST(NTriplesParse, EmptyStream) {
  EXPECT_EQ(parse_ntriples("").size(), 0u);
  EXPECT_EQ(parse_ntriples("# only a comment\n\n   \n").size(), 0u);
}

TEST(NTriplesParse, FourEntityFixtureHasTwentyEdges) {
  EXPECT_EQ(fsp::testing::four_entity_graph().size(), 20u);
}

TEST(NTriplesParse, DuplicatesCollapseAndCrlfAccepted) {
  Graph g = parse_ntriples("<urn:a> <urn:p> \"x\" .\r\n<urn:a> <urn:p> \"x\" .\r\n");
  EXPECT_EQ(g.size(), 1u);
}

TEST(NTriplesParse, LiteralForms) {
  Graph g = parse_ntriples(
      "_:b1 <urn:p> \"a\\\"b\\u00e9\" .\n"
      "_:b1 <urn:p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "_:b1 <urn:p> \"hi\"@en-GB .\n"
      "_:b1 <urn:q> _:b2.\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.contains({Term::blank("b1"), Term::iri("urn:p"), Term::literal("a\"b\xC3\xA9")}));
  EXPECT_TRUE(g.contains({Term::blank("b1"), Term::iri("urn:p"),
                          Term::literal("5", "http://www.w3.org/2001/XMLSchema#integer")}));
  EXPECT_TRUE(g.contains({Term::blank("b1"), Term::iri("urn:p"), Term::literal("hi", {}, "en-GB")}));
  EXPECT_TRUE(g.contains({Term::blank("b1"), Term::iri("urn:q"), Term::blank("b2")}));
}

TEST(NTriplesParse, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_ntriples(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("<urn:a> <urn:p> <urn:b> .\n<urn:a> <urn:p> <urn:b>\n"), 2u);
  EXPECT_EQ(line_of("# c\n<urn:a> <urn:p> <urn:b .\n"), 2u);
  EXPECT_EQ(line_of("<urn:a> <urn:p> \"open .\n"), 1u);
  EXPECT_EQ(line_of("\n\n\"lit\" <urn:p> <urn:b> .\n"), 3u);
  EXPECT_EQ(line_of("<urn:a> _:p <urn:b> .\n"), 1u);
  EXPECT_EQ(line_of("<relative> <urn:p> <urn:b> .\n"), 1u);
}

TEST(NTriplesSerialize, EmptyAndSingle) {
  EXPECT_EQ(serialize_ntriples(Graph{}), "");
  Graph g = parse_ntriples("<urn:c1> <urn:p1> <urn:e1> .");
  EXPECT_EQ(serialize_ntriples(g), "<urn:c1> <urn:p1> <urn:e1> .\n");
}

TEST(NTriplesSerialize, SortedAndDeterministic) {
  Graph g = parse_ntriples("<urn:b> <urn:p> <urn:x> .\n<urn:a> <urn:q> <urn:x> .\n<urn:a> <urn:p> <urn:y> .\n");
  EXPECT_EQ(serialize_ntriples(g),
            "<urn:a> <urn:p> <urn:y> .\n<urn:a> <urn:q> <urn:x> .\n<urn:b> <urn:p> <urn:x> .\n");
}

TEST(NTriplesSerialize, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(rng);
    const std::string text = serialize_ntriples(g);
    Graph back = parse_ntriples(text);
    ASSERT_TRUE(set_equal(g, back)) << text;
    EXPECT_EQ(serialize_ntriples(back), text);
  }
}

TEST(GraphIndexes, SetSemanticsAndCoherence) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_graph(rng);
    const std::size_t before = g.size();
    if (before > 0) {
      EXPECT_FALSE(g.insert(g.resolve(g.triples()[0])));
      EXPECT_EQ(g.size(), before);
    }
    std::set<std::tuple<TermId, TermId, TermId>> seen;
    for (const IdTriple& t : g.triples()) {
      auto subjects = g.subjects_with(t.predicate, t.object);
      std::set<TermId> expected;
      for (const IdTriple& u : g.triples()) {
        if (u.predicate == t.predicate && u.object == t.object) expected.insert(u.subject);
      }
      EXPECT_EQ(std::set<TermId>(subjects.begin(), subjects.end()), expected);
      EXPECT_EQ(subjects.size(), expected.size());
    }
  }
}

TEST(GraphIndexes, RejectsInvalidTriples) {
  Graph g;
  EXPECT_THROW(g.insert({Term::literal("x"), Term::iri("urn:p"), Term::iri("urn:o")}),
               PreconditionError);
  EXPECT_THROW(g.insert({Term::iri("urn:s"), Term::blank("p"), Term::iri("urn:o")}),
               PreconditionError);
  EXPECT_TRUE(g.empty());
}

TEST(EntitiesOfClass, FourEntityFixture) {
  Graph g = fsp::testing::four_entity_graph();
  std::vector<Term> expected = {iri("c1"), iri("c2"), iri("c3"), iri("c4")};
  EXPECT_EQ(entities_of_class(g, iri("C")), expected);
  EXPECT_TRUE(entities_of_class(g, iri("Unknown")).empty());
}

TEST(EntitiesOfClass, MatchesLinearScanAndAreSubjects) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto rg = fsp::testing::random_complete_functional(rng, 1, 5, 40);
    for (const Term& cls : {rg.cls, Term::iri("urn:ex:Other"), Term::iri("urn:ex:none")}) {
      std::set<Term> scan;
      for (const Triple& t : rg.graph.sorted_triples()) {
        if (t.predicate == rg.graph.type_predicate() && t.object == cls) scan.insert(t.subject);
      }
      auto got = entities_of_class(rg.graph, cls);
      EXPECT_EQ(std::set<Term>(got.begin(), got.end()), scan);
      for (const Term& e : got) EXPECT_FALSE(rg.graph.edges_of(*rg.graph.lookup(e)).empty());
    }
  }
}

TEST(ClassProperties, FourEntityFixtureAndEmpty) {
  Graph g = fsp::testing::four_entity_graph();
  EXPECT_EQ(class_properties(g, iri("C")), props({"p1", "p2", "p3", "p4"}));
  EXPECT_TRUE(class_properties(g, iri("Nothing")).empty());
}

TEST(ClassProperties, MatchesLinearScan) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto rg = fsp::testing::random_complete_functional(rng, 1, 6, 30);
    std::set<Term> instances, scan;
    for (const Triple& t : rg.graph.sorted_triples()) {
      if (t.predicate == rg.graph.type_predicate() && t.object == rg.cls) instances.insert(t.subject);
    }
    for (const Triple& t : rg.graph.sorted_triples()) {
      if (instances.contains(t.subject) && !(t.predicate == rg.graph.type_predicate())) {
        scan.insert(t.predicate);
      }
    }
    EXPECT_EQ(class_properties(rg.graph, rg.cls), PropertyList(scan.begin(), scan.end()));
  }
}

TEST(ObjectTuple, Lookups) {
  Graph g = fsp::testing::four_entity_graph();
  auto t = object_tuple(g, iri("c1"), props({"p1", "p2", "p3"}));
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (std::vector<Term>{iri("e1"), iri("e2"), iri("e3")}));
  auto single = object_tuple(g, iri("c1"), props({"p4"}));
  ASSERT_TRUE(single);
  EXPECT_EQ(*single, std::vector<Term>{iri("e4")});
  EXPECT_FALSE(object_tuple(g, iri("c1"), props({"p1", "p9"})));
}

TEST(ObjectTuple, FunctionalityViolationNamesEntityAndProperty) {
  Graph g = fsp::testing::four_entity_graph();
  g.insert({iri("c2"), iri("p1"), iri("e9")});
  try {
    object_tuple(g, iri("c2"), props({"p1"}));
    FAIL() << "expected AssumptionViolation";
  } catch (const AssumptionViolation& e) {
    EXPECT_NE(std::string(e.what()).find("urn:ex:c2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("urn:ex:p1"), std::string::npos);
  }
}

TEST(TypePredicate, Configurable) {
  Graph g = parse_ntriples("<urn:x> <urn:isA> <urn:K> .\n<urn:x> <urn:p> <urn:v> .\n",
                           Term::iri("urn:isA"));
  EXPECT_EQ(entities_of_class(g, Term::iri("urn:K")).size(), 1u);
  EXPECT_EQ(class_properties(g, Term::iri("urn:K")), PropertyList{Term::iri("urn:p")});
}

}  // namespace
}  // namespace fsp::rdf

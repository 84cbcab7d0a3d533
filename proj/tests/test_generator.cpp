#include <gtest/gtest.h>

#include "fsp/detect.hpp"
#include "fsp/error.hpp"
#include "fsp/generator.hpp"
#include "fsp/rdf/ntriples.hpp"
#include "fsp/rdf/queries.hpp"
#include "fsp/star_stats.hpp"

namespace fsp::gen {
namespace {

using rdf::Term;

rdf::PropertyList all_properties(const GeneratorSpec& spec) {
  rdf::PropertyList out;
  for (std::size_t j = 0; j < spec.num_properties; ++j) {
    out.push_back(Term::iri(property_iri(spec, j)));
  }
  return rdf::canonical(out);
}

TEST(Generator, SmallSkewedShape) {
  GeneratorSpec spec{4, 4, 0.25, 3};
  auto g = generate(spec, 7);
  const Term cls = Term::iri(class_iri(spec));
  EXPECT_EQ(g.size(), 20u);
  const auto s = all_properties(spec);
  EXPECT_EQ(rdf::class_properties(g, cls), s);
  EXPECT_TRUE(detect::check_assumptions(g, cls, s).ok());

  // One property carries a 2/1/1 split, the other three are constant.
  std::vector<std::size_t> widths;
  for (const auto& p : s) widths.push_back(stats::repetition_histogram(g, cls, p).size());
  std::sort(widths.begin(), widths.end());
  EXPECT_EQ(widths, (std::vector<std::size_t>{1, 1, 1, 3}));
  EXPECT_EQ(stats::ami(stats::build_star_table(g, cls, s)), 3);

  auto r = detect::gfsp(g, cls, s);
  EXPECT_EQ(r.best_properties.size(), 3u);
  EXPECT_EQ(r.objective.ami, 1);
}

TEST(Generator, FullSkewGivesOnePattern) {
  GeneratorSpec spec{50, 5, 1.0, 4};
  auto g = generate(spec, 1);
  const auto s = all_properties(spec);
  EXPECT_EQ(stats::ami(stats::build_star_table(g, Term::iri(class_iri(spec)), s)), 1);
}

TEST(Generator, DistinctTupleCountMatchesSkew) {
  for (double skew : {0.0, 0.2, 0.5, 0.9}) {
    GeneratorSpec spec{1000, 4, skew, 10};
    auto g = generate(spec, 3);
    const auto s = all_properties(spec);
    EXPECT_EQ(stats::ami(stats::build_star_table(g, Term::iri(class_iri(spec)), s)),
              static_cast<std::int64_t>(distinct_tuples(spec)))
        << "skew " << skew;
  }
}

TEST(Generator, LargeDatasetEdgeCounts) {
  GeneratorSpec spec{10000, 5, 0.5, 10};
  auto g = generate(spec, 11);
  EXPECT_EQ(g.size(), 60000u);
  const Term cls = Term::iri(class_iri(spec));
  EXPECT_EQ(stats::instance_count(g, cls), 10000);
  EXPECT_EQ(stats::nle(g, cls, all_properties(spec), stats::EdgeConvention::without_type_edges),
            50000);
}

TEST(Generator, DeterministicPerSeed) {
  GeneratorSpec spec{200, 4, 0.6, 5};
  EXPECT_EQ(rdf::serialize_ntriples(generate(spec, 5)),
            rdf::serialize_ntriples(generate(spec, 5)));
  EXPECT_NE(rdf::serialize_ntriples(generate(spec, 5)),
            rdf::serialize_ntriples(generate(spec, 6)));
}

TEST(Generator, RejectsInvalidSpecs) {
  EXPECT_THROW(generate({0, 3, 0.5, 3}, 0), PreconditionError);
  EXPECT_THROW(generate({10, 0, 0.5, 3}, 0), PreconditionError);
  EXPECT_THROW(generate({10, 3, 0.5, 0}, 0), PreconditionError);
  EXPECT_THROW(generate({10, 3, -0.1, 3}, 0), PreconditionError);
  EXPECT_THROW(generate({10, 3, 1.5, 3}, 0), PreconditionError);
  // 2^3 = 8 tuples cannot cover 10 distinct entities.
  EXPECT_THROW(generate({10, 3, 0.0, 2}, 0), PreconditionError);
}

TEST(Generator, NoSkewOverFullSpaceIsUniform) {
  GeneratorSpec spec{27, 3, 0.0, 3};
  auto g = generate(spec, 9);
  const Term cls = Term::iri(class_iri(spec));
  for (const auto& p : all_properties(spec)) {
    auto h = stats::repetition_histogram(g, cls, p);
    ASSERT_EQ(h.size(), 3u);
    for (const auto& [o, pct] : h) EXPECT_NEAR(pct, 100.0 / 3.0, 1e-9);
  }
}

}  // namespace
}  // namespace fsp::gen

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "squap/catalog.hpp"
#include "squap/model.hpp"
#include "squap/reasoner.hpp"
#include "squap/turtle.hpp"

using namespace squap;
using oracle::ex;
using oracle::v;

namespace {

const Term kType = v(vocab::type);

Materialization closure_of(const Graph& g, Execution execution = Execution::parallel) {
  return materialize(g, AxiomSet::squap(), {execution, true});
}

int cited(const std::vector<Diagnostic>& diags, int number) {
  return static_cast<int>(std::count_if(diags.begin(), diags.end(), [&](const Diagnostic& d) {
    return std::find(d.axioms.begin(), d.axioms.end(), number) != d.axioms.end();
  }));
}

Graph parse_file(const std::string& name) { return parse_turtle_file(std::string(FIXTURE_DIR) + "/" + name).graph; }

}  // namespace

// ------------------------------------------------------------ axiom coverage

struct SubclassCase {
  int number;
  std::string_view sub;
  std::string_view super;
};

class SubclassAxiomTest : public ::testing::TestWithParam<SubclassCase> {};

TEST_P(SubclassAxiomTest, InfersSuperclassWithTrace) {
  const auto& c = GetParam();
  Graph g;
  g.insert({ex("x"), kType, v(c.sub)});
  const auto m = closure_of(g);
  const Triple expected{ex("x"), kType, v(c.super)};
  ASSERT_TRUE(m.closure.contains(expected));
  const Derivation* why = m.trace.find(expected);
  ASSERT_NE(why, nullptr);
  EXPECT_EQ(why->rule, RuleKind::subclass);
  EXPECT_EQ(AxiomSet::squap().subclasses.at(why->axiom).number, c.number);
}

INSTANTIATE_TEST_SUITE_P(
    Axioms, SubclassAxiomTest,
    ::testing::Values(SubclassCase{1, vocab::Value, vocab::Region},
                      SubclassCase{5, vocab::SoftwareQualityCharacteristic, vocab::Concept},
                      SubclassCase{7, vocab::ArchitecturalAlignment, vocab::SoftwareQualityCharacteristic},
                      SubclassCase{10, vocab::ProcessMaturity, vocab::SoftwareQualityCharacteristic},
                      SubclassCase{13, vocab::SoftwareQuality, vocab::SoftwareQualityCharacteristic},
                      SubclassCase{18, vocab::SoftwareQualityFactor, vocab::Description},
                      SubclassCase{24, vocab::ArchitecturalAlignmentResult, vocab::MeasurementResult},
                      SubclassCase{25, vocab::ProcessMaturityResult, vocab::MeasurementResult},
                      SubclassCase{26, vocab::SoftwareQualityResult, vocab::MeasurementResult},
                      SubclassCase{27, vocab::FactorOccurrence, vocab::Situation}),
    [](const auto& info) { return "ax" + std::to_string(info.param.number); });

struct DisjointCase {
  int number;
  std::string_view first;
  std::string_view second;
};

class DisjointAxiomTest : public ::testing::TestWithParam<DisjointCase> {};

TEST_P(DisjointAxiomTest, ClashGivesExactlyOneInconsistency) {
  const auto& c = GetParam();
  Graph g;
  g.insert({ex("x"), kType, v(c.first)});
  g.insert({ex("x"), kType, v(c.second)});
  const auto m = closure_of(g);
  const auto diags = check_consistency(m.closure, AxiomSet::squap());
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(cited(diags, c.number), 1);
  EXPECT_EQ(diags[0].severity, Severity::inconsistency);

  Graph one;
  one.insert({ex("x"), kType, v(c.first)});
  EXPECT_TRUE(check_consistency(closure_of(one).closure, AxiomSet::squap()).empty());
}

INSTANTIATE_TEST_SUITE_P(
    Axioms, DisjointAxiomTest,
    ::testing::Values(DisjointCase{3, vocab::Concept, vocab::Description},
                      DisjointCase{4, vocab::Description, vocab::Concept},
                      DisjointCase{8, vocab::ArchitecturalAlignment, vocab::ProcessMaturity},
                      DisjointCase{9, vocab::ArchitecturalAlignment, vocab::SoftwareQuality},
                      DisjointCase{11, vocab::ProcessMaturity, vocab::ArchitecturalAlignment},
                      DisjointCase{12, vocab::ProcessMaturity, vocab::SoftwareQuality},
                      DisjointCase{14, vocab::SoftwareQuality, vocab::ArchitecturalAlignment},
                      DisjointCase{15, vocab::SoftwareQuality, vocab::ProcessMaturity},
                      DisjointCase{16, vocab::Concept, vocab::Description},
                      DisjointCase{17, vocab::Description, vocab::Situation}),
    [](const auto& info) { return "ax" + std::to_string(info.param.number); });

TEST(DisjointAxioms, InheritedClashIsFound) {
  // A factor (a Description by axiom 18) that is also a characteristic
  // (a Concept through axioms 13 and 5).
  Graph g;
  g.insert({ex("x"), kType, v(vocab::SoftwareQualityFactor)});
  g.insert({ex("x"), kType, v(vocab::SoftwareQuality)});
  const auto diags = check_consistency(closure_of(g).closure, AxiomSet::squap());
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(diags[0].rule, "ax3/ax4/ax16");
}

struct CardinalityCase {
  int number;
  std::string_view cls;
  std::string_view property;
  bool literal;
};

class CardinalityAxiomTest : public ::testing::TestWithParam<CardinalityCase> {};

TEST_P(CardinalityAxiomTest, SecondValueViolatesUnderUna) {
  const auto& c = GetParam();
  Graph g;
  g.insert({ex("x"), kType, v(c.cls)});
  g.insert({ex("x"), v(c.property), c.literal ? Term::literal("a") : ex("a")});
  const auto single = closure_of(g);
  EXPECT_TRUE(check_consistency(single.closure, AxiomSet::squap()).empty());
  EXPECT_EQ(cited(validate_strict(single.closure, AxiomSet::squap()), c.number), 0);

  g.insert({ex("x"), v(c.property), c.literal ? Term::literal("b") : ex("b")});
  const auto m = closure_of(g);
  const auto diags = check_consistency(m.closure, AxiomSet::squap(), true);
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(cited(diags, c.number), 1);
  EXPECT_EQ(diags[0].severity, Severity::constraint_violation);
  EXPECT_EQ(diags[0].triples.size(), 2u);
  // Without the unique name assumption the two values may be the same thing.
  EXPECT_TRUE(check_consistency(m.closure, AxiomSet::squap(), false).empty());
}

TEST_P(CardinalityAxiomTest, MissingValueWarnsInStrictMode) {
  const auto& c = GetParam();
  Graph g;
  g.insert({ex("x"), kType, v(c.cls)});
  const auto m = closure_of(g);
  EXPECT_TRUE(check_consistency(m.closure, AxiomSet::squap()).empty());
  const auto warnings = validate_strict(m.closure, AxiomSet::squap());
  EXPECT_EQ(cited(warnings, c.number), 1);
  for (const auto& w : warnings) EXPECT_EQ(w.severity, Severity::warning);
}

INSTANTIATE_TEST_SUITE_P(
    Axioms, CardinalityAxiomTest,
    ::testing::Values(CardinalityCase{2, vocab::Value, vocab::value, true},
                      CardinalityCase{22, vocab::MeasurementResult, vocab::hasValue, false},
                      CardinalityCase{23, vocab::MeasurementResult, vocab::hasMetric, false}),
    [](const auto& info) { return "ax" + std::to_string(info.param.number); });

TEST(CoveringAxiom, Ax6UncoveredCharacteristicWarns) {
  Graph g;
  g.insert({ex("x"), kType, v(vocab::SoftwareQualityCharacteristic)});
  const auto warnings = validate_strict(closure_of(g).closure, AxiomSet::squap());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].rule, "ax6");
  EXPECT_EQ(warnings[0].severity, Severity::warning);

  for (auto part : {vocab::SoftwareQuality, vocab::ArchitecturalAlignment, vocab::ProcessMaturity}) {
    Graph covered;
    covered.insert({ex("x"), kType, v(part)});
    EXPECT_EQ(cited(validate_strict(closure_of(covered).closure, AxiomSet::squap()), 6), 0);
  }
}

TEST(UniversalAxiom, Ax19TypesUsedCharacteristics) {
  Graph g;
  g.insert({ex("f"), kType, v(vocab::SoftwareQualityFactor)});
  g.insert({ex("f"), v(vocab::usesQualityCharacteristic), ex("c")});
  const auto m = closure_of(g);
  const Triple typed{ex("c"), kType, v(vocab::SoftwareQualityCharacteristic)};
  ASSERT_TRUE(m.closure.contains(typed));
  EXPECT_EQ(m.trace.find(typed)->rule, RuleKind::universal);
  EXPECT_EQ(AxiomSet::squap().universals.at(m.trace.find(typed)->axiom).number, 19);
  EXPECT_TRUE(m.closure.contains({ex("c"), kType, v(vocab::Concept)}));
  // The link alone, without the factor typing, says nothing about c.
  Graph untyped;
  untyped.insert({ex("f"), v(vocab::usesQualityCharacteristic), ex("c")});
  EXPECT_FALSE(closure_of(untyped).closure.contains(typed));
}

struct ExistentialCase {
  int number;
  std::string_view cls;
  std::string_view property;
};

class ExistentialAxiomTest : public ::testing::TestWithParam<ExistentialCase> {};

TEST_P(ExistentialAxiomTest, StrictModeWarnsOnlyWhenMissing) {
  const auto& c = GetParam();
  Graph g;
  g.insert({ex("x"), kType, v(c.cls)});
  const auto without = validate_strict(closure_of(g).closure, AxiomSet::squap());
  EXPECT_EQ(cited(without, c.number), 1);
  g.insert({ex("x"), v(c.property), ex("y")});
  const auto m = closure_of(g);
  EXPECT_EQ(cited(validate_strict(m.closure, AxiomSet::squap()), c.number), 0);
  // Existentials never mint individuals.
  for (const Triple& t : m.closure.triples()) {
    EXPECT_FALSE(t.subject.is_blank() || t.object.is_blank());
  }
  EXPECT_TRUE(check_consistency(closure_of(g).closure, AxiomSet::squap()).empty());
}

INSTANTIATE_TEST_SUITE_P(
    Axioms, ExistentialAxiomTest,
    ::testing::Values(ExistentialCase{20, vocab::SoftwareQualityFactor, vocab::usesQualityCharacteristic},
                      ExistentialCase{21, vocab::MeasurementResult, vocab::assesses},
                      ExistentialCase{28, vocab::FactorOccurrence, vocab::isAffectedBy},
                      ExistentialCase{29, vocab::FactorOccurrence, vocab::satisfiesFactor}),
    [](const auto& info) { return "ax" + std::to_string(info.param.number); });

TEST(ChainAxiom, Ax30UsesConceptFollowsSpecializes) {
  Graph g;
  g.insert({ex("f"), v(vocab::usesConcept), ex("a")});
  g.insert({ex("a"), v(vocab::specializes), ex("b")});
  g.insert({ex("b"), v(vocab::specializes), ex("c")});
  const auto m = closure_of(g);
  const Triple direct{ex("f"), v(vocab::usesConcept), ex("b")};
  ASSERT_TRUE(m.closure.contains(direct));
  EXPECT_EQ(m.trace.find(direct)->rule, RuleKind::chain);
  EXPECT_EQ(AxiomSet::squap().chains.at(m.trace.find(direct)->axiom).number, 30);
  EXPECT_TRUE(m.closure.contains({ex("f"), v(vocab::usesConcept), ex("c")}));
  EXPECT_FALSE(m.closure.contains({ex("a"), v(vocab::usesConcept), ex("c")}));
}

TEST(AxiomSet, NumbersOneToThirtyEachOnce) {
  const auto numbered = AxiomSet::squap().numbered();
  ASSERT_EQ(numbered.size(), 30u);
  EXPECT_EQ(numbered.begin()->first, 1);
  EXPECT_EQ(numbered.rbegin()->first, 30);
}

TEST(AxiomSet, AbsorbTboxAddsNothingNew) {
  AxiomSet a = AxiomSet::squap();
  const auto before = a.subclasses.size() + a.disjoint.size() + a.transitive.size() + a.inverses.size() +
                      a.subproperties.size();
  a.absorb(bundled_tbox());
  const auto after = a.subclasses.size() + a.disjoint.size() + a.transitive.size() + a.inverses.size() +
                     a.subproperties.size();
  EXPECT_EQ(before, after);
}

TEST(AxiomSet, AbsorbPicksUpUserAxioms) {
  AxiomSet a = AxiomSet::squap();
  Graph g;
  g.insert({ex("A"), v(vocab::subClassOf), ex("B")});
  g.insert({ex("p"), kType, v(vocab::owlTransitiveProperty)});
  a.absorb(g);
  g.insert({ex("x"), kType, ex("A")});
  g.insert({ex("x"), ex("p"), ex("y")});
  g.insert({ex("y"), ex("p"), ex("z")});
  const auto m = materialize(g, a);
  EXPECT_TRUE(m.closure.contains({ex("x"), kType, ex("B")}));
  EXPECT_TRUE(m.closure.contains({ex("x"), ex("p"), ex("z")}));
}

// ----------------------------------------------------------- other rules

TEST(Rules, SpecializesIsTransitiveWithInverse) {
  Graph g;
  g.insert({ex("a"), v(vocab::specializes), ex("b")});
  g.insert({ex("b"), v(vocab::specializes), ex("c")});
  const auto m = closure_of(g);
  EXPECT_TRUE(m.closure.contains({ex("a"), v(vocab::specializes), ex("c")}));
  EXPECT_EQ(m.trace.find({ex("a"), v(vocab::specializes), ex("c")})->rule, RuleKind::transitive);
  EXPECT_TRUE(m.closure.contains({ex("c"), v(vocab::isSpecializedBy), ex("a")}));
}

TEST(Rules, IsAffectedByInverse) {
  Graph g;
  g.insert({ex("o"), v(vocab::isAffectedBy), ex("r")});
  const auto m = closure_of(g);
  EXPECT_TRUE(m.closure.contains({ex("r"), v(vocab::affectsMeasurementOf), ex("o")}));
  EXPECT_EQ(m.trace.find({ex("r"), v(vocab::affectsMeasurementOf), ex("o")})->rule, RuleKind::inverse);
}

TEST(Rules, UsesQualityCharacteristicIsUsesConcept) {
  Graph g;
  g.insert({ex("f"), v(vocab::usesQualityCharacteristic), ex("c")});
  const auto m = closure_of(g);
  EXPECT_TRUE(m.closure.contains({ex("f"), v(vocab::usesConcept), ex("c")}));
}

TEST(Rules, LiteralsNeverBecomeSubjects) {
  AxiomSet a;
  a.inverses.push_back({oracle::kEx + "p", oracle::kEx + "q"});
  a.universals.push_back({oracle::kEx + "C", oracle::kEx + "p", oracle::kEx + "D"});
  Graph g;
  g.insert({ex("x"), kType, ex("C")});
  g.insert({ex("x"), ex("p"), Term::literal("v")});
  const auto m = materialize(g, a);
  EXPECT_EQ(m.closure.size(), g.size());
}

TEST(Rules, EmptyGraphNeedsNoRounds) {
  const auto m = closure_of(Graph{});
  EXPECT_TRUE(m.closure.empty());
  EXPECT_EQ(m.rounds, 0u);
}

// -------------------------------------------------------------- fixtures

TEST(Fixtures, GqmAndDogfoodingAreConsistent) {
  for (const char* name : {"gqm.ttl", "dogfooding.ttl"}) {
    Graph g = bundled_tbox();
    g.insert_all(default_catalog_graph(), "c-");
    g.insert_all(parse_file(name), "d-");
    AxiomSet a = AxiomSet::squap();
    a.absorb(g);
    const auto m = materialize(g, a);
    EXPECT_TRUE(check_consistency(m.closure, a).empty()) << name;
    EXPECT_EQ(oracle::replay_trace(g, m, a), "") << name;
  }
}

TEST(Fixtures, GqmCharacteristicsTypedFromCatalog) {
  Graph g = default_catalog_graph();
  g.insert_all(parse_file("gqm.ttl"));
  const auto m = closure_of(g);
  EXPECT_TRUE(m.closure.contains({iri(std::string(vocab::kSoftwareQualityStem) + "Compatibility"), kType,
                                  v(vocab::Concept)}));
  EXPECT_TRUE(m.closure.contains({iri("https://w3id.org/squap/examples/gqm/compatibility-result"), kType,
                                  v(vocab::MeasurementResult)}));
}

// ------------------------------------------------------------ properties

TEST(Properties, ClosureEqualsNaiveFixpoint) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 200; ++round) {
    const auto c = oracle::random_case(rng);
    const auto m = materialize(c.graph, c.axioms);
    const auto expected = oracle::naive_closure(oracle::to_set(c.graph), c.axioms);
    ASSERT_EQ(oracle::to_set(m.closure), expected) << "round " << round;
    ASSERT_EQ(oracle::replay_trace(c.graph, m, c.axioms), "") << "round " << round;
  }
}

TEST(Properties, DomainClosureEqualsNaiveFixpoint) {
  std::mt19937 rng(99);
  for (int round = 0; round < 100; ++round) {
    const auto d = oracle::random_domain(rng);
    const auto m = closure_of(d.graph);
    ASSERT_EQ(oracle::to_set(m.closure), oracle::naive_closure(oracle::to_set(d.graph), AxiomSet::squap()));
  }
}

TEST(Properties, Idempotent) {
  std::mt19937 rng(5);
  for (int round = 0; round < 100; ++round) {
    const auto c = oracle::random_case(rng);
    const auto once = materialize(c.graph, c.axioms);
    const auto twice = materialize(once.closure, c.axioms);
    ASSERT_TRUE(same_triples(once.closure, twice.closure));
    ASSERT_EQ(twice.trace.size(), 0u);
  }
}

TEST(Properties, Monotone) {
  std::mt19937 rng(6);
  for (int round = 0; round < 100; ++round) {
    const auto c = oracle::random_case(rng);
    auto extra = oracle::random_case(rng);
    Graph bigger = c.graph;
    bigger.insert_all(extra.graph);
    const auto small = oracle::to_set(materialize(c.graph, c.axioms).closure);
    const auto large = oracle::to_set(materialize(bigger, c.axioms).closure);
    ASSERT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end())) << round;
  }
}

TEST(Properties, AxiomOrderDoesNotMatter) {
  std::mt19937 rng(8);
  for (int round = 0; round < 100; ++round) {
    auto c = oracle::random_case(rng);
    const auto expected = materialize(c.graph, c.axioms).closure;
    AxiomSet shuffled = c.axioms;
    std::shuffle(shuffled.subclasses.begin(), shuffled.subclasses.end(), rng);
    std::shuffle(shuffled.universals.begin(), shuffled.universals.end(), rng);
    std::shuffle(shuffled.chains.begin(), shuffled.chains.end(), rng);
    std::shuffle(shuffled.inverses.begin(), shuffled.inverses.end(), rng);
    std::shuffle(shuffled.subproperties.begin(), shuffled.subproperties.end(), rng);
    std::shuffle(shuffled.transitive.begin(), shuffled.transitive.end(), rng);
    ASSERT_TRUE(same_triples(expected, materialize(c.graph, shuffled).closure)) << round;
  }
}

namespace {

// Long specializes chains plus factors and results: large enough deltas to
// take the OpenMP path.
Graph large_graph(int chains, int length) {
  Graph g;
  for (int c = 0; c < chains; ++c) {
    auto node = [&](int i) { return ex("c" + std::to_string(c) + "-" + std::to_string(i)); };
    for (int i = 0; i + 1 < length; ++i) g.insert({node(i), v(vocab::specializes), node(i + 1)});
    const Term factor = ex("f" + std::to_string(c));
    g.insert({factor, kType, v(vocab::SoftwareQualityFactor)});
    g.insert({factor, v(vocab::usesQualityCharacteristic), node(0)});
    const Term result = ex("r" + std::to_string(c));
    g.insert({result, kType, v(vocab::SoftwareQualityResult)});
    g.insert({result, v(vocab::assesses), node(length / 2)});
  }
  return g;
}

}  // namespace

TEST(Properties, SerialAndParallelKernelsAgree) {
  for (auto [chains, length] : {std::pair{1, 5}, std::pair{4, 60}, std::pair{6, 120}}) {
    const Graph g = large_graph(chains, length);
    const auto serial = closure_of(g, Execution::serial);
    const auto parallel = closure_of(g, Execution::parallel);
    ASSERT_TRUE(same_triples(serial.closure, parallel.closure));
    EXPECT_EQ(serial.rounds, parallel.rounds);
    EXPECT_EQ(serial.trace.entries().size(), parallel.trace.entries().size());
    for (const auto& [t, why] : serial.trace.entries()) {
      const Derivation* other = parallel.trace.find(t);
      ASSERT_NE(other, nullptr);
      EXPECT_EQ(other->rule, why.rule);
      EXPECT_EQ(other->premises, why.premises);
    }
  }
  std::mt19937 rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto c = oracle::random_case(rng);
    ASSERT_TRUE(same_triples(materialize(c.graph, c.axioms, {Execution::serial, false}).closure,
                             materialize(c.graph, c.axioms, {Execution::parallel, false}).closure));
  }
}

TEST(Properties, LargeChainClosureSize) {
  // A chain of n nodes has n(n-1)/2 specializes pairs and as many inverses.
  const int n = 120;
  const auto m = closure_of(large_graph(1, n), Execution::parallel);
  std::size_t specializes = 0;
  std::size_t inverse = 0;
  for (const Triple& t : m.closure.triples()) {
    specializes += t.predicate.value == vocab::specializes;
    inverse += t.predicate.value == vocab::isSpecializedBy;
  }
  EXPECT_EQ(specializes, static_cast<std::size_t>(n * (n - 1) / 2));
  EXPECT_EQ(inverse, specializes);
}

// ------------------------------------------------------------ rendering

TEST(Diagnostics, RenderingAndSeverity) {
  Graph g;
  g.insert({ex("x"), kType, v(vocab::Concept)});
  g.insert({ex("x"), kType, v(vocab::Description)});
  const auto diags = check_consistency(closure_of(g).closure, AxiomSet::squap());
  ASSERT_EQ(diags.size(), 1u);
  EXPECT_EQ(max_severity(diags), Severity::inconsistency);
  EXPECT_EQ(count_at_least(diags, Severity::constraint_violation), 1u);
  EXPECT_EQ(max_severity({}), Severity::warning);
  const std::string records = render_records(diags);
  EXPECT_EQ(records.rfind("ax3/ax4/ax16\tinconsistency\t", 0), 0u) << records;
  EXPECT_EQ(std::count(records.begin(), records.end(), '\n'), 1);
  const std::string text = render_text(diags, PrefixMap{{"ex", oracle::kEx}});
  EXPECT_NE(text.find("ex:x"), std::string::npos) << text;
  EXPECT_NE(text.find("axioms 3, 4, 16"), std::string::npos) << text;
}

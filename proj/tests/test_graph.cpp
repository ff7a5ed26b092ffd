#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "squap/error.hpp"
#include "squap/graph.hpp"
#include "squap/prefix_map.hpp"

using namespace squap;
using oracle::ex;

TEST(Term, IriMustBeAbsolute) {
  EXPECT_NO_THROW(Term::iri("https://w3id.org/squap/Value"));
  EXPECT_NO_THROW(Term::iri("urn:x"));
  EXPECT_THROW(Term::iri("Value"), StructureError);
  EXPECT_THROW(Term::iri("1http://x"), StructureError);
  EXPECT_THROW(Term::iri(""), StructureError);
}

TEST(Term, EqualityIsLexical) {
  EXPECT_NE(Term::literal("7", std::string(kXsdInteger)), Term::literal("07", std::string(kXsdInteger)));
  EXPECT_EQ(Term::integer(7), Term::literal("7", std::string(kXsdInteger)));
  EXPECT_NE(Term::literal("7"), Term::integer(7));
  EXPECT_NE(Term::lang_literal("a", "en"), Term::literal("a"));
}

TEST(Term, WellFormedness) {
  EXPECT_THROW(check_well_formed({Term::literal("x"), ex("p"), ex("o")}), StructureError);
  EXPECT_THROW(check_well_formed({ex("s"), Term::blank("b"), ex("o")}), StructureError);
  EXPECT_NO_THROW(check_well_formed({Term::blank("b"), ex("p"), Term::literal("x")}));
}

TEST(Term, NTriplesEscapes) {
  EXPECT_EQ(to_ntriples(Term::literal("a\"b\\c\nd")), R"("a\"b\\c\nd")");
  EXPECT_EQ(to_ntriples(Term::integer(233)), "\"233\"^^<http://www.w3.org/2001/XMLSchema#integer>");
  EXPECT_EQ(to_ntriples(Term::lang_literal("hi", "en")), "\"hi\"@en");
  EXPECT_EQ(to_ntriples(Term::blank("x")), "_:x");
}

TEST(Graph, InsertIsIdempotent) {
  Graph g;
  const Triple t{ex("s"), ex("p"), ex("o")};
  EXPECT_EQ(g.insert(t), 1u);
  EXPECT_EQ(g.insert(t), 0u);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(t));
  EXPECT_EQ(g.erase(t), 1u);
  EXPECT_EQ(g.erase(t), 0u);
  EXPECT_TRUE(g.empty());
}

TEST(Graph, InsertRejectsLiteralSubject) {
  Graph g;
  EXPECT_THROW(g.insert({Term::literal("x"), ex("p"), ex("o")}), StructureError);
  EXPECT_TRUE(g.empty());
}

TEST(Graph, MatchOnEveryPattern) {
  Graph g;
  g.insert({ex("a"), ex("p"), ex("b")});
  g.insert({ex("a"), ex("q"), ex("c")});
  g.insert({ex("b"), ex("p"), ex("c")});
  EXPECT_EQ(g.match(ex("a"), std::nullopt, std::nullopt).size(), 2u);
  EXPECT_EQ(g.match(std::nullopt, ex("p"), std::nullopt).size(), 2u);
  EXPECT_EQ(g.match(std::nullopt, std::nullopt, ex("c")).size(), 2u);
  EXPECT_EQ(g.match(ex("a"), std::nullopt, ex("c")).size(), 1u);
  EXPECT_EQ(g.match(std::nullopt, std::nullopt, std::nullopt).size(), 3u);
  EXPECT_TRUE(g.match(ex("zz"), std::nullopt, std::nullopt).empty());
}

TEST(Graph, InsertAllRelabelsBlankNodes) {
  Graph a, b;
  a.insert({Term::blank("x"), ex("p"), ex("o")});
  b.insert({Term::blank("x"), ex("p"), ex("o")});
  Graph u;
  u.insert_all(a, "a-");
  u.insert_all(b, "b-");
  EXPECT_EQ(u.size(), 2u);
  Graph same;
  same.insert_all(a);
  same.insert_all(b);
  EXPECT_EQ(same.size(), 1u);
}

// Every index must give the same answer as a linear filter for every
// combination of bound positions.
TEST(Graph, IndexesAgreeWithLinearScan) {
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    auto c = oracle::random_case(rng);
    Graph& g = c.graph;
    const auto all = g.id_triples();
    std::vector<IdTriple> sample(all.begin(), all.end());
    sample.push_back({0, 0, 0});
    for (const IdTriple& probe : sample) {
      for (int mask = 0; mask < 8; ++mask) {
        Graph::Pattern pat;
        if (mask & 1) pat[0] = probe.s;
        if (mask & 2) pat[1] = probe.p;
        if (mask & 4) pat[2] = probe.o;
        std::vector<IdTriple> expected;
        for (const IdTriple& t : all) {
          if ((!pat[0] || t.s == *pat[0]) && (!pat[1] || t.p == *pat[1]) && (!pat[2] || t.o == *pat[2])) {
            expected.push_back(t);
          }
        }
        for (Index index : {Index::spo, Index::pos, Index::osp}) {
          auto got = g.scan(index, pat);
          std::sort(got.begin(), got.end());
          ASSERT_EQ(got, expected) << "round " << round << " mask " << mask;
        }
        std::vector<IdTriple> visited;
        g.for_each(pat, [&](IdTriple t) { visited.push_back(t); });
        std::sort(visited.begin(), visited.end());
        ASSERT_EQ(visited, expected);
      }
    }
  }
}

TEST(PrefixMap, ExpandAndCompact) {
  const PrefixMap p = standard_prefixes();
  EXPECT_EQ(p.expand("squap:Value"), "https://w3id.org/squap/Value");
  EXPECT_EQ(p.expand("prc:Documentation"), "https://w3id.org/squap/ProcessMaturity/Documentation");
  EXPECT_FALSE(p.expand("nope:x"));
  EXPECT_FALSE(p.expand("plain"));
  // The longer namespace wins.
  EXPECT_EQ(p.compact("https://w3id.org/squap/ProcessMaturity/Documentation"), "prc:Documentation");
  EXPECT_EQ(p.compact("https://w3id.org/squap/Value"), "squap:Value");
  EXPECT_FALSE(p.compact("https://w3id.org/squap/a/b"));
  EXPECT_FALSE(p.compact("http://other.org/x"));
}

TEST(PrefixMap, LocalNames) {
  EXPECT_TRUE(is_plain_local_name("likert-scale-1-7"));
  EXPECT_TRUE(is_plain_local_name(""));
  EXPECT_FALSE(is_plain_local_name("a/b"));
  EXPECT_FALSE(is_plain_local_name("trailing."));
  EXPECT_FALSE(is_plain_local_name("-lead"));
}

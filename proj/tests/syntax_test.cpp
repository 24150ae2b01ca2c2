#include <gtest/gtest.h>

#include <map>

#include "lambek/parse.hpp"
#include "lambek/grammar.hpp"

using namespace lambek;

TEST(ParseType, Atom) {
  Type t = parse_type("p");
  EXPECT_TRUE(t.is(Kind::Prim));
  EXPECT_EQ(t.name(), "p");
}

TEST(ParseType, NestedModalities) {
  Type t = parse_type("boxd dia dia p");
  EXPECT_EQ(t, Type::boxdown(Type::dia(Type::dia(Type::prim("p")))));
}

TEST(ParseType, UnitFamilyMember) {
  Type t = parse_type("(1/q) \\ 1");
  EXPECT_EQ(t, Type::under(Type::over(Type::unit(), Type::prim("q")), Type::unit()));
  EXPECT_EQ(t.length(), 1);
}

TEST(ParseType, PrefixBindsTighter) {
  EXPECT_EQ(parse_type("dia p \\ p"), Type::under(Type::dia(Type::prim("p")), Type::prim("p")));
}

TEST(ParseType, AdjacentTokens) {
  Type t = parse_type("p3/dia:1(p1 * dia:2(p2/p2))");
  EXPECT_EQ(t.str(), "p3 / dia:1 (p1 * dia:2 (p2 / p2))");
}

TEST(ParseType, Errors) {
  EXPECT_THROW(parse_type("p / q / r"), ParseError);
  EXPECT_THROW(parse_type("dia:1 dia p"), ParseError);
  EXPECT_THROW(parse_type("(p"), ParseError);
  EXPECT_THROW(parse_type("2"), ParseError);
  try {
    parse_type("p $ q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ParseType, RoundTrip) {
  for (const char* s : {"p", "1", "dia 1", "boxd (p * q)", "(p / q) \\ dia:3 r", "dia:2 boxd:2 (p \\ (q / p))"}) {
    Type t = parse_type(s);
    EXPECT_EQ(parse_type(t.str()), t) << s;
    EXPECT_EQ(t.str(), std::string(s));
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(parse_type("p").length(), 1);
  EXPECT_EQ(parse_type("dia 1").length(), 2);
  EXPECT_EQ(parse_type("(1/q)\\1").length(), 1);
  EXPECT_EQ(parse_type("boxd (p * q)").length(), 4);
}

TEST(Sequent, ExampleRoundTrip) {
  Sequent s = parse_sequent("[ [ p ] dia p \\ p ] => boxd dia dia p");
  EXPECT_EQ(str(s), "[ [ p ] dia p \\ p ] => boxd dia dia p");
  ASSERT_EQ(s.antecedent.size(), 1u);
  EXPECT_TRUE(s.antecedent[0].is_bracket());
  EXPECT_EQ(s.antecedent[0].children.size(), 2u);
  EXPECT_EQ(parse_sequent(str(s)), s);
}

TEST(Sequent, AxiomAndEmptyBracket) {
  Sequent a = parse_sequent("p => p");
  EXPECT_EQ(a.antecedent.size(), 1u);
  Sequent s = parse_sequent("[:1 p1 [:2 ]:2 ]:1 => dia:1 (p1 * dia:2 1)");
  EXPECT_EQ(str(s), "[:1 p1 [:2 ]:2 ]:1 => dia:1 (p1 * dia:2 1)");
  EXPECT_TRUE(s.antecedent[0].children[1].children.empty());
  Sequent e = parse_sequent("=> 1");
  EXPECT_TRUE(e.antecedent.empty());
  EXPECT_EQ(str(e), "=> 1");
}

TEST(Sequent, Errors) {
  EXPECT_THROW(parse_sequent("p _ => p"), ParseError);
  EXPECT_THROW(parse_sequent("[:1 p ]:2 => p"), ParseError);
  EXPECT_THROW(parse_sequent("[ p ]:1 => p"), ParseError);
  EXPECT_THROW(parse_sequent("[:1 p ]:1 => dia p"), ParseError);
  EXPECT_THROW(parse_sequent("p p"), ParseError);
}

TEST(Measures, SigmaTau) {
  EXPECT_EQ(sigma("p1", parse_type("dia:1 p1 \\ p2")), 1);
  Sequent s = parse_sequent("[:2 [:1 p1 ]:1 dia:1 p1 \\ p2 ]:2 => boxd:3 dia:3 dia:2 p2");
  EXPECT_EQ(tau(2, s), 2);
  EXPECT_EQ(tau(5, s), 0);
  EXPECT_EQ(tau(3, s), 2);
  EXPECT_TRUE(is_thin(s));
  EXPECT_FALSE(is_thin(parse_sequent("p1 p1 p1 => p1")));
  EXPECT_FALSE(is_thin(parse_sequent("dia:1 p1 dia:1 p1 dia:1 p1 => p2")));
}

TEST(Measures, LengthIdentity) {
  // ||A|| = sum sigma + 2 * modality count
  for (const char* s : {"dia:1 p1 \\ p2", "boxd:2 (p1 * dia:3 1)", "(p1 / p2) * p1"}) {
    Type t = parse_type(s);
    std::set<std::string> prims;
    std::set<int> idx;
    collect_primitives(t, prims);
    collect_indices(t, idx);
    int total = 0;
    for (auto& p : prims) total += sigma(p, t);
    for (int i : idx) total += 2 * tau(i, t);
    EXPECT_EQ(total, t.length()) << s;
  }
}

TEST(Hedges, PlugAndYield) {
  Hedge h = parse_hedge("a b");
  EXPECT_EQ(plug(parse_context("_"), h), h);
  EXPECT_EQ(str(plug(parse_context("[ _ q ]"), h)), "[ a b q ]");
  auto y = yield_of(parse_hedge("[ [ p ] dia p \\ p ]"));
  ASSERT_EQ(y.size(), 2u);
  EXPECT_EQ(y[0].str(), "p");
  EXPECT_EQ(y[1].str(), "dia p \\ p");
  EXPECT_THROW(parse_context("a b"), ParseError);
  EXPECT_THROW(parse_context("_ [ _ ]"), ParseError);
}

TEST(Hedges, NestedPlugComposes) {
  Hedge c1 = parse_context("x [ _ y ]");
  Hedge c2 = parse_context("[ z _ ]");
  Hedge d = parse_hedge("a");
  EXPECT_EQ(plug(c1, plug(c2, d)), plug(plug(c1, c2), d));
  auto yy = yield_of(plug(c1, d));
  ASSERT_EQ(yy.size(), 3u);
  EXPECT_EQ(yy[1].str(), "a");
}

TEST(Deindex, Examples) {
  Sequent s = parse_sequent("[:2 [:1 p1 ]:1 dia:1 p1 \\ p2 ]:2 => boxd:3 dia:3 dia:2 p2");
  std::map<std::string, std::string> th{{"p1", "p"}, {"p2", "p"}};
  EXPECT_EQ(deindex(s, th), parse_sequent("[ [ p ] dia p \\ p ] => boxd dia dia p"));
  EXPECT_EQ(str(deindex(parse_sequent("p1 => p1"), {{"p1", "q"}})), "q => q");
  EXPECT_EQ(str(deindex(parse_sequent("dia:7 p3 => dia:7 p3"), {{"p3", "p"}})), "dia p => dia p");
}

TEST(GrammarFile, Parse) {
  Grammar g = parse_grammar("# comment\nlexicon a : s/b\nlexicon a : (s/b)/s\nlexicon b : b\ntarget : s\n");
  EXPECT_EQ(g.alphabet.size(), 2u);
  EXPECT_EQ(g.types_of("a").size(), 2u);
  EXPECT_EQ(g.distinguished.str(), "s");
  EXPECT_EQ(g.bound(), 3);
  EXPECT_THROW(parse_grammar("lexicon a : p\n"), std::runtime_error);
  EXPECT_THROW(parse_grammar("target : dia:1 p\n"), std::runtime_error);
}

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "lambek/cfg.hpp"

using namespace lambek;

namespace {

using Word = std::vector<std::string>;

Cfg grammar(const std::string& text) { return parse_cfg(text); }

// Least fixpoint of the string sets of every nonterminal, truncated at n.
std::set<Word> fixpoint_language(const Cfg& g, std::size_t n) {
  std::map<std::string, std::set<Word>> lang;
  auto of = [&](const Symbol& s) -> std::set<Word> {
    if (s.terminal) return {{s.name}};
    return lang[s.name];
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& p : g.productions) {
      std::set<Word> acc{{}};
      for (const auto& sym : p.rhs) {
        std::set<Word> next;
        for (const Word& a : acc)
          for (const Word& b : of(sym)) {
            if (a.size() + b.size() > n) continue;
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            next.insert(std::move(w));
          }
        acc = std::move(next);
      }
      for (const Word& w : acc) changed |= lang[p.lhs].insert(w).second;
    }
  }
  return lang[g.start];
}

Cfg random_grammar(std::mt19937& rng) {
  const std::vector<std::string> nts{"S", "A", "B"};
  const std::vector<std::string> ts{"a", "b"};
  Cfg g;
  g.start = "S";
  g.nonterminals = {nts.begin(), nts.end()};
  g.terminals = {ts.begin(), ts.end()};
  std::uniform_int_distribution<int> count(2, 6), len(0, 3), pick(0, 4);
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    Production p{nts[static_cast<std::size_t>(pick(rng)) % 3], {}};
    int l = len(rng);
    for (int j = 0; j < l; ++j) {
      int x = pick(rng);
      p.rhs.push_back(x < 3 ? Symbol::nt(nts[static_cast<std::size_t>(x)]) : Symbol::t(ts[static_cast<std::size_t>(x - 3)]));
    }
    g.add(std::move(p));
  }
  return g;
}

}  // namespace

TEST(Cfg, ZeroSteps) {
  Cfg g = grammar("start: \"D\"\n\"D\" -> a\n");
  auto t = derives(g, "D", std::vector<Symbol>{Symbol::nt("D")});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->steps(), 0u);
}

TEST(Cfg, EpsilonRule) {
  Cfg g = grammar("start: \"dia p\"\n\"dia 1\" -> eps\n\"dia p\" -> \"p\"\n\"p\" -> a\n");
  auto t = derives(g, "dia 1", Word{});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->steps(), 1u);
  auto u = derives(g, "dia p", std::vector<Symbol>{Symbol::nt("p")});
  ASSERT_TRUE(u);
  EXPECT_EQ(u->steps(), 1u);
  EXPECT_TRUE(derives(g, "dia p", Word{"a"}));
  EXPECT_FALSE(derives(g, "dia p", Word{}));
}

TEST(Cfg, OnlyA) {
  Cfg g = grammar("start: \"D\"\n\"D\" -> a\n");
  auto l = language_upto(g, 3);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0], Word{"a"});
}

TEST(Cfg, UnknownSymbol) {
  Cfg g = grammar("start: \"D\"\n\"D\" -> a\n");
  EXPECT_THROW(derives(g, "D", Word{"z"}), std::invalid_argument);
}

TEST(Cfg, TextRoundTrip) {
  const std::string text =
      "start: \"s\"\n\"s\" -> \"s / b\" \"b\"\n\"b\" -> b\n\"s / b\" -> a\n\"dia 1\" -> eps\n";
  Cfg g = grammar(text);
  EXPECT_EQ(cfg_text(g), text);
  EXPECT_TRUE(g.nonterminals.count("dia 1"));
  EXPECT_TRUE(g.terminals.count("a"));
  EXPECT_TRUE(g.nonterminals.count("b"));
  EXPECT_TRUE(g.terminals.count("b"));
  // the type b and the terminal b stay apart
  EXPECT_TRUE(derives(g, "b", Word{"b"}));
  EXPECT_FALSE(derives(g, "s", Word{"a"}));
  EXPECT_THROW(parse_cfg("\"s\" -> a\n"), std::invalid_argument);
}

TEST(Cfg, NullableChains) {
  Cfg g = grammar("start: \"S\"\n\"S\" -> \"A\" \"S\" \"A\"\n\"S\" -> b\n\"A\" -> eps\n\"A\" -> a\n");
  EXPECT_TRUE(derives(g, "S", Word{"b"}));
  EXPECT_TRUE(derives(g, "S", Word{"a", "b"}));
  EXPECT_TRUE(derives(g, "S", Word{"a", "a", "b", "a"}));
  EXPECT_FALSE(derives(g, "S", Word{"b", "b"}));
}

TEST(Cfg, AgreesWithFixpointOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Cfg g = random_grammar(rng);
    auto want = fixpoint_language(g, 4);
    auto got = language_upto(g, 4);
    EXPECT_EQ(std::set<Word>(got.begin(), got.end()), want) << cfg_text(g);
    // trees rebuild the word
    for (const Word& w : got) {
      auto t = derives(g, g.start, w);
      ASSERT_TRUE(t);
      Word back;
      std::function<void(const CfgTree&)> walk = [&](const CfgTree& x) {
        if (x.rule < 0) back.push_back(x.symbol.name);
        for (const auto& c : x.children) walk(c);
      };
      walk(*t);
      EXPECT_EQ(back, w);
    }
  }
}

TEST(Cfg, EpsEliminationKeepsLanguage) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    Cfg g = random_grammar(rng);
    Cfg h = eps_eliminated(g);
    for (const Production& p : h.productions) EXPECT_FALSE(p.rhs.empty());
    auto a = language_upto(g, 4);
    auto b = language_upto(h, 4);
    std::set<Word> left(a.begin(), a.end()), right(b.begin(), b.end());
    if (nullable(g).count(g.start)) right.insert(Word{});
    EXPECT_EQ(left, right) << cfg_text(g);
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "lambek/compile.hpp"
#include "lambek/recognize.hpp"

using namespace lambek;

namespace {

using Word = std::vector<std::string>;

bool has_production(const Cfg& g, const std::string& lhs, const std::vector<Symbol>& rhs) {
  return std::any_of(g.productions.begin(), g.productions.end(), [&](const Production& p) {
    if (p.lhs != lhs || p.rhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < rhs.size(); ++i)
      if (p.rhs[i].name != rhs[i].name || p.rhs[i].terminal != rhs[i].terminal) return false;
    return true;
  });
}

std::string data(const std::string& f) { return (std::filesystem::path(LAMBEK_DATA_DIR) / f).string(); }

void expect_equivalent(const Grammar& g, Calculus calc, std::size_t max_len) {
  Compiled c = compile_grammar(g, calc);
  Prover prover(calc);
  for (const Word& w : strings_upto(g.alphabet, max_len)) {
    Recognition r = recognize(g, w, calc, prover);
    EXPECT_EQ(r.member, derives(c.cfg, c.cfg.start, w).has_value()) << w.size();
    EXPECT_FALSE(r.over_budget) << str(*r.over_budget);
    if (r.member) {
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(provable(*r.witness, calc));
      EXPECT_EQ(yield_of(r.witness->antecedent).size(), w.size());
    }
  }
}

}  // namespace

TEST(Compile, LexicalAndSRules) {
  Grammar g = parse_grammar("target: q\nlexicon a: p\nlexicon b: p \\ q\n");
  Cfg c = compile_cfg(g, Calculus::Ldia);
  EXPECT_EQ(c.start, "q");
  EXPECT_TRUE(has_production(c, "q", {Symbol::nt("p"), Symbol::nt("p \\ q")}));
  EXPECT_TRUE(has_production(c, "p", {Symbol::t("a")}));
  EXPECT_TRUE(has_production(c, "p \\ q", {Symbol::t("b")}));
  EXPECT_FALSE(has_production(c, "q", {Symbol::nt("p \\ q"), Symbol::nt("p")}));
  EXPECT_TRUE(derives(c, "q", Word{"a", "b"}));
  EXPECT_FALSE(derives(c, "q", Word{"b", "a"}));
  EXPECT_TRUE(recognize(g, Word{"a", "b"}, Calculus::Ldia).member);
  EXPECT_FALSE(recognize(g, Word{"b", "a"}, Calculus::Ldia).member);
}

TEST(Compile, StarredHasEpsilonRule) {
  Grammar g = parse_grammar("target: p\nlexicon a: p\n");
  Cfg c = compile_cfg(g, Calculus::LstarDia);
  EXPECT_TRUE(has_production(c, "dia 1", {}));
  EXPECT_TRUE(c.nonterminals.count("dia 1"));
  EXPECT_FALSE(c.nonterminals.count("1"));
  Cfg plain = compile_cfg(g, Calculus::Ldia);
  EXPECT_FALSE(has_production(plain, "dia 1", {}));
}

TEST(Compile, ModalRulesNeedRoom) {
  Grammar g = parse_grammar("target: dia p\nlexicon a: p\n");
  ASSERT_EQ(g.bound(), 3);
  Cfg c = compile_cfg(g, Calculus::Ldia);
  EXPECT_TRUE(has_production(c, "dia p", {Symbol::nt("p")}));
  EXPECT_TRUE(has_production(c, "p", {Symbol::nt("boxd p")}));
  // only ||A|| <= m - 2 = 1
  EXPECT_FALSE(has_production(c, "dia (p / p)", {Symbol::nt("p / p")}));
  EXPECT_TRUE(derives(c, "dia p", Word{"a"}));

  Grammar flat = parse_grammar("target: p\nlexicon a: p\n");
  for (const Production& p : compile_cfg(flat, Calculus::Ldia).productions)
    EXPECT_NE(p.lhs.rfind("dia", 0), 0u) << production_text(p);
}

TEST(Compile, Errors) {
  Grammar g = parse_grammar("target: p\nlexicon a: p\n");
  EXPECT_THROW(compile_cfg(g, Calculus::L), std::invalid_argument);
  CompileOptions small;
  small.max_nonterminals = 3;
  EXPECT_THROW(compile_cfg(parse_grammar("target: p\nlexicon a: p / p\n"), Calculus::Ldia, small), std::runtime_error);
}

TEST(Recognize, BracketedWitness) {
  Grammar g = load_grammar(data("brackets.lg"));
  Recognition r = recognize(g, Word{"a"}, Calculus::Ldia);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(bracket_count(r.witness->antecedent), 1);
  EXPECT_FALSE(recognize(g, Word{}, Calculus::Ldia).member);
}

TEST(Recognize, StarredEmptyString) {
  Grammar g = load_grammar(data("starred.lg"));
  Recognition r = recognize(g, Word{}, Calculus::LstarDia);
  // [ ] => dia (p / p) holds through p / p in the empty bracket
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.witness->antecedent, parse_hedge("[ ]"));
  EXPECT_FALSE(provable(Sequent{Hedge{}, g.distinguished}, Calculus::LstarDia));
}

TEST(Equivalence, Anbn) { expect_equivalent(load_grammar(data("anbn.lg")), Calculus::Ldia, 4); }

TEST(Equivalence, Brackets) { expect_equivalent(load_grammar(data("brackets.lg")), Calculus::Ldia, 3); }

TEST(Strings, Upto) {
  auto s = strings_upto({"a", "b"}, 2);
  ASSERT_EQ(s.size(), 7u);
  EXPECT_TRUE(s[0].empty());
  EXPECT_EQ(s[1], Word{"a"});
  EXPECT_EQ(s[6], (Word{"b", "b"}));
}

#include <gtest/gtest.h>

#include <set>

#include "lambek/cut.hpp"
#include "lambek/enumerate.hpp"
#include "lambek/parse.hpp"

using namespace lambek;

namespace {

Sequent S(const char* s) { return parse_sequent(s); }

std::vector<Sequent> base_of(std::initializer_list<const char*> xs) {
  std::vector<Sequent> out;
  for (const char* x : xs) out.push_back(S(x));
  return out;
}

// Naive forward closure under Cut, keeping conclusions whose antecedent is
// no larger than `limit` trees plus brackets.
std::set<std::string> cut_closure(const std::vector<Sequent>& base, int limit) {
  auto size = [](const Hedge& h) { return leaf_count(h) + bracket_count(h); };
  std::vector<Sequent> all = base;
  std::set<std::string> seen;
  for (const Sequent& s : base) seen.insert(str(s));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Sequent> fresh;
    for (const Sequent& left : all)
      for (const Sequent& right : all)
        for (const Path& path : all_paths(right.antecedent)) {
          const Hedge& at = hedge_at(right.antecedent, path);
          for (std::size_t i = 0; i < at.size(); ++i) {
            if (!at[i].is_leaf() || at[i].type != left.succedent) continue;
            Sequent s{splice(right.antecedent, Span{path, i, i + 1}, left.antecedent), right.succedent};
            if (size(s.antecedent) > limit) continue;
            if (seen.insert(str(s)).second) fresh.push_back(s);
          }
        }
    if (!fresh.empty()) grew = true;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return seen;
}

}  // namespace

TEST(Cut, Leaf) {
  auto base = base_of({"p p \\ q => q"});
  auto d = cut_derives(base, S("p p \\ q => q"));
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->is_leaf);
}

TEST(Cut, BracketRecomposition) {
  auto base = base_of({"p => p", "dia p => dia p", "[ p ] => dia p"});
  auto d = cut_derives(base, S("[ p ] => dia p"));
  ASSERT_TRUE(d);
  EXPECT_TRUE(replay(*d));
  // with the bridge removed the goal needs two cuts
  auto base2 = base_of({"p => q", "dia q => r", "[ q ] => dia q"});
  auto d2 = cut_derives(base2, S("[ p ] => r"));
  ASSERT_TRUE(d2);
  EXPECT_TRUE(replay(*d2));
  EXPECT_EQ(d2->cuts(), 2u);
  EXPECT_EQ(str(d2->conclusion), "[ p ] => r");
}

TEST(Cut, Chain) {
  auto base = base_of({"p p \\ p => p"});
  auto d = cut_derives(base, S("p p \\ p p \\ p p \\ p => p"));
  ASSERT_TRUE(d);
  EXPECT_TRUE(replay(*d));
  EXPECT_EQ(d->cuts(), 2u);
  std::vector<Sequent> leaves;
  cut_leaves(*d, leaves);
  for (const Sequent& l : leaves) EXPECT_EQ(str(l), "p p \\ p => p");
}

TEST(Cut, Empty) {
  auto base = base_of({"=> p / p", "p / p q => q"});
  auto d = cut_derives(base, S("q => q"));
  ASSERT_TRUE(d);
  EXPECT_TRUE(replay(*d));
  EXPECT_FALSE(cut_derives(base, S("q q => q")));
}

TEST(Cut, EmptyBracket) {
  auto base = base_of({"[ ] => dia 1", "dia 1 p => p"});
  auto d = cut_derives(base, S("[ ] p => p"));
  ASSERT_TRUE(d);
  EXPECT_TRUE(replay(*d));
}

TEST(Cut, NotDerivable) {
  auto base = base_of({"p p \\ q => q"});
  EXPECT_FALSE(cut_derives(base, S("p p \\ q p => q")));
  EXPECT_FALSE(cut_derives(base, S("[ p ] p \\ q => q")));
}

TEST(Cut, ReplayDetectsTampering) {
  auto base = base_of({"p p \\ p => p"});
  auto d = cut_derives(base, S("p p \\ p p \\ p => p"));
  ASSERT_TRUE(d);
  CutDerivation bad = *d;
  bad.conclusion = S("p => p");
  EXPECT_FALSE(replay(bad));
}

TEST(Cut, AgreesWithForwardClosure) {
  auto base = base_of({"p q \\ r => r", "[ r ] => s", "p => q", "q => p", "[ ] => q", "s s \\ r => r"});
  const int limit = 4;
  auto closure = cut_closure(base, limit);
  auto types = std::vector<Type>{parse_type("p"), parse_type("q"), parse_type("r"), parse_type("s"),
                                 parse_type("q \\ r"), parse_type("s \\ r")};
  int hits = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for_each_tuple<Type>(types, n, [&](const std::vector<Type>& ys) {
      for (int b = 0; b + static_cast<int>(n) <= limit; ++b)
        for (const Hedge& h : enum_hedges(ys, b, true))
          for (const Type& goal : types) {
            Sequent s{h, goal};
            auto d = cut_derives(base, s);
            bool in = closure.count(str(s)) > 0;
            EXPECT_EQ(d.has_value(), in) << str(s);
            if (d) {
              EXPECT_TRUE(replay(*d));
              EXPECT_EQ(d->conclusion, s);
              ++hits;
            }
          }
    });
  EXPECT_GT(hits, 10);
}

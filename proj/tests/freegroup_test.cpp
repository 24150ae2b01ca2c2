#include <gtest/gtest.h>

#include <random>

#include "lambek/freegroup.hpp"
#include "lambek/parse.hpp"
#include "lambek/prover.hpp"

using namespace lambek;

namespace {

GroupWord W(std::initializer_list<std::pair<const char*, int>> ls) {
  std::vector<Letter> v;
  for (auto& [n, s] : ls) v.push_back(Letter{Generator::prim(n), s});
  return GroupWord(v);
}

GroupWord random_word(std::mt19937& rng, int maxlen) {
  static const char* gens[] = {"a", "b", "c"};
  std::uniform_int_distribution<int> len(0, maxlen), g(0, 2), s(0, 1);
  std::vector<Letter> v;
  int n = len(rng);
  for (int i = 0; i < n; ++i) v.push_back(Letter{Generator::prim(gens[g(rng)]), s(rng) ? 1 : -1});
  return GroupWord(v);
}

// reduce by cancelling a random adjacent inverse pair until none is left
std::vector<Letter> reduce_randomly(std::vector<Letter> v, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i].gen == v[i + 1].gen && v[i].sign == -v[i + 1].sign) spots.push_back(i);
    if (spots.empty()) return v;
    std::size_t at = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(at), v.begin() + static_cast<std::ptrdiff_t>(at + 2));
  }
}

}  // namespace

TEST(GroupWord, Cancellation) {
  EXPECT_TRUE(mul(W({{"a", 1}}), W({{"a", -1}})).is_identity());
  EXPECT_EQ(mul(W({{"a", 1}, {"b", 1}}), W({{"b", -1}, {"a", 1}})), W({{"a", 1}, {"a", 1}}));
  GroupWord u({Letter{Generator::open(1), 1}, Letter{Generator::prim("p1"), 1}});
  EXPECT_EQ(wlen(inv(u)), 2u);
  EXPECT_EQ(str(inv(u)), "p1' <1'");
}

TEST(Interpret, Examples) {
  EXPECT_EQ(str(interpret(parse_type("dia:2 p1"))), "<2 p1 >2");
  EXPECT_EQ(str(interpret(parse_type("boxd:2 p1"))), "<2' p1 >2'");
  EXPECT_EQ(str(interpret(parse_hedge("[:1 p1 [:2 ]:2 ]:1"))), "<1 p1 <2 >2 >1");
  EXPECT_EQ(str(interpret(parse_type("p1 \\ p2"))), "p1' p2");
  EXPECT_EQ(str(interpret(parse_type("p2 / p1"))), "p2 p1'");
  EXPECT_TRUE(interpret(parse_type("1")).is_identity());
  EXPECT_THROW(interpret(parse_type("dia p")), std::invalid_argument);
}

TEST(Interpret, LengthBound) {
  for (const char* t : {"dia:1 p1 \\ p2", "boxd:3 dia:3 dia:2 p2", "(p1 / p1) * dia:1 1", "p1 \\ (p1 * p2)"}) {
    Type a = parse_type(t);
    EXPECT_LE(wlen(interpret(a)), static_cast<std::size_t>(a.length())) << t;
  }
}

TEST(Interpret, ProvableSequentsAgree) {
  for (const char* s : {"[:2 [:1 p1 ]:1 dia:1 p1 \\ p2 ]:2 => boxd:3 dia:3 dia:2 p2",
                        "p3/dia:1(p1 * dia:2(p2/p2)) [:1 p1 [:2 ]:2 ]:1 => p3"}) {
    Sequent q = parse_sequent(s);
    Calculus c = has_empty_bracket(q.antecedent) ? Calculus::L1starDiaM : Calculus::LdiaM;
    ASSERT_TRUE(provable(q, c)) << s;
    EXPECT_EQ(interpret(q.antecedent), interpret(q.succedent)) << s;
  }
}

TEST(PentusSplit, Examples) {
  GroupWord u = W({{"a", 1}, {"b", -1}});
  EXPECT_EQ(pentus_split({u, inv(u)}), 1u);
  EXPECT_EQ(pentus_split({W({{"a", 1}}), W({{"b", 1}}), W({{"b", -1}}), W({{"a", -1}})}), 2u);
  EXPECT_THROW(pentus_split({u}), std::invalid_argument);
  EXPECT_THROW(pentus_split({u, u}), std::invalid_argument);
}

TEST(PentusSplit, RandomIdentityProducts) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    // telescoping: u_i = x_{i-1}^{-1} x_i with x_0 = x_n = e
    std::vector<GroupWord> xs{GroupWord()};
    for (std::size_t i = 1; i < n; ++i) xs.push_back(random_word(rng, 2));
    xs.push_back(GroupWord());
    std::vector<GroupWord> us;
    for (std::size_t i = 1; i <= n; ++i) us.push_back(mul(inv(xs[i - 1]), xs[i]));
    std::size_t k = pentus_split(us);
    ASSERT_GE(k, 1u);
    ASSERT_LT(k, n);
    EXPECT_LE(wlen(mul(us[k - 1], us[k])), std::max(wlen(us[k - 1]), wlen(us[k])));
  }
}

TEST(GroupLaws, Randomized) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    GroupWord a = random_word(rng, 6), b = random_word(rng, 6), c = random_word(rng, 6);
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, GroupWord()), a);
    EXPECT_TRUE(mul(a, inv(a)).is_identity());
    EXPECT_TRUE(mul(inv(a), a).is_identity());
    EXPECT_EQ(wlen(inv(a)), wlen(a));
  }
}

TEST(GroupLaws, ReductionConfluence) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 12), g(0, 2), s(0, 1);
  static const char* gens[] = {"a", "b", "c"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back(Letter{Generator::prim(gens[g(rng)]), s(rng) ? 1 : -1});
    EXPECT_EQ(GroupWord(raw).letters(), reduce_randomly(raw, rng));
  }
}

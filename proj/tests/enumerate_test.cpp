#include <gtest/gtest.h>

#include <set>

#include "lambek/enumerate.hpp"
#include "lambek/parse.hpp"

using namespace lambek;

TEST(EnumTypes, Counts) {
  EXPECT_EQ(enum_types({"p"}, 1, false).size(), 1u);
  EXPECT_EQ(enum_types({"p"}, 2, false).size(), 4u);
  EXPECT_EQ(enum_types({"p", "q"}, 2, false).size(), 14u);
  EXPECT_EQ(enum_types({"p"}, 3, false).size(), 24u);
  EXPECT_EQ(enum_types({"p"}, 2, true).size(), 5u);
}

TEST(EnumTypes, OrderAndContents) {
  auto ts = enum_types({"p"}, 2, false);
  std::vector<std::string> got;
  for (const Type& t : ts) got.push_back(t.str());
  EXPECT_EQ(got, (std::vector<std::string>{"p", "p * p", "p / p", "p \\ p"}));
  auto g = enum_types({"p"}, 2, true);
  std::set<std::string> names;
  for (const Type& t : g) names.insert(t.str());
  EXPECT_TRUE(names.count("dia 1"));
  EXPECT_FALSE(names.count("1"));
}

TEST(EnumTypes, LengthsAndUniqueness) {
  for (bool guarded : {false, true}) {
    auto ts = enum_types({"p", "q"}, 4, guarded);
    std::set<std::string> seen;
    int last = 0;
    for (const Type& t : ts) {
      EXPECT_LE(t.length(), 4);
      EXPECT_GE(t.length(), last);
      last = t.length();
      EXPECT_TRUE(seen.insert(t.str()).second) << t.str();
      EXPECT_EQ(parse_type(t.str()), t);
      if (guarded) {
        EXPECT_TRUE(is_guarded(t));
      }
    }
  }
}

TEST(EnumHedges, SmallCounts) {
  std::vector<Type> y{parse_type("p"), parse_type("q")};
  EXPECT_EQ(enum_hedges(y, 0, false).size(), 1u);
  // [p] q, p [q], [p q]
  EXPECT_EQ(enum_hedges(y, 1, false).size(), 3u);
  // adds [] p q, p [] q, p q []
  EXPECT_EQ(enum_hedges(y, 1, true).size(), 6u);
  EXPECT_EQ(enum_hedges({}, 0, true).size(), 1u);
  EXPECT_EQ(enum_hedges({}, 1, true).size(), 1u);
  EXPECT_EQ(enum_hedges({}, 1, false).size(), 0u);
  // [ [ ] ] and [ ] [ ]
  EXPECT_EQ(enum_hedges({}, 2, true).size(), 2u);
}

TEST(EnumHedges, YieldAndBracketsPreserved) {
  std::vector<Type> y{parse_type("p"), parse_type("q"), parse_type("r")};
  for (bool empty : {false, true})
    for (int b = 0; b <= 3; ++b) {
      std::set<std::string> seen;
      for (const Hedge& h : enum_hedges(y, b, empty)) {
        EXPECT_EQ(yield_of(h), y);
        EXPECT_EQ(bracket_count(h), b);
        EXPECT_EQ(has_empty_bracket(h) && !empty, false);
        EXPECT_TRUE(seen.insert(str(h)).second);
      }
    }
}

TEST(ForEachTuple, Counts) {
  std::vector<int> pool{1, 2, 3};
  int n = 0;
  for_each_tuple<int>(pool, 3, [&](const std::vector<int>&) { ++n; });
  EXPECT_EQ(n, 27);
  n = 0;
  for_each_tuple<int>(pool, 0, [&](const std::vector<int>& v) { n += v.empty(); });
  EXPECT_EQ(n, 1);
}

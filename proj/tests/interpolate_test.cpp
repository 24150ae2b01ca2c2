#include <gtest/gtest.h>

#include "lambek/family.hpp"
#include "lambek/interpolate.hpp"
#include "lambek/parse.hpp"
#include "lambek/prover.hpp"
#include "lambek/thin.hpp"

using namespace lambek;

namespace {

Sequent S(const char* s) { return parse_sequent(s); }

void expect_all_partitions(const Proof& p, Calculus c) {
  for (const Span& sp : all_spans(p.conclusion.antecedent, has_unit(c))) {
    auto r = extract_interpolant(p, sp, c);
    auto v = verify_interpolant(p.conclusion, sp, r, c);
    EXPECT_TRUE(v.all()) << str(p.conclusion) << " selecting " << str(slice(p.conclusion.antecedent, sp))
                         << " gives " << r.interpolant.str();
  }
}

}  // namespace

TEST(Thin, ExampleIndexing) {
  auto p = prove(S("[ [ p ] dia p \\ p ] => boxd dia dia p"), Calculus::Ldia);
  ASSERT_TRUE(p);
  ThinResult t = thin_index(*p, Calculus::Ldia);
  EXPECT_EQ(str(t.proof.conclusion), "[:2 [:1 p1 ]:1 dia:1 p1 \\ p2 ]:2 => boxd:3 dia:3 dia:2 p2");
  EXPECT_TRUE(is_thin(t.proof.conclusion));
  EXPECT_TRUE(check(t.proof, Calculus::LdiaM));
  EXPECT_EQ(deindex(t.proof.conclusion, t.theta), p->conclusion);
}

TEST(Thin, Axiom) {
  ThinResult t = thin_index(build::axiom(Type::prim("p")), Calculus::Ldia);
  EXPECT_EQ(str(t.proof.conclusion), "p1 => p1");
  EXPECT_EQ(t.theta.at("p1"), "p");
}

TEST(Interpolate, Axiom) {
  auto r = extract_interpolant(build::axiom(Type::prim("p1")), Span{{}, 0, 1}, Calculus::LdiaM);
  EXPECT_EQ(r.interpolant.str(), "p1");
}

TEST(Interpolate, UnitExample) {
  auto p = prove(S("p3/dia:1(p1 * dia:2(p2/p2)) [:1 p1 [:2 ]:2 ]:1 => p3"), Calculus::L1starDiaM);
  ASSERT_TRUE(p);
  auto r = extract_interpolant(*p, parse_context("p3/dia:1(p1 * dia:2(p2/p2)) _"),
                               parse_hedge("[:1 p1 [:2 ]:2 ]:1"), Calculus::L1starDiaM);
  EXPECT_EQ(r.interpolant, parse_type("dia:1 (p1 * dia:2 1)"));
  EXPECT_TRUE(verify_interpolant(p->conclusion, Span{{}, 1, 2}, r, Calculus::L1starDiaM).all());
  expect_all_partitions(*p, Calculus::L1starDiaM);
}

TEST(Interpolate, ExampleAllPartitions) {
  auto p = prove(S("[ [ p ] dia p \\ p ] => boxd dia dia p"), Calculus::Ldia);
  ASSERT_TRUE(p);
  expect_all_partitions(*p, Calculus::Ldia);
  ThinResult t = thin_index(*p, Calculus::Ldia);
  expect_all_partitions(t.proof, Calculus::LdiaM);
  for (const Span& sp : all_spans(t.proof.conclusion.antecedent, false))
    EXPECT_TRUE(verify_thin_eq2(t.proof, sp, Calculus::LdiaM));
  auto r = extract_interpolant(t.proof, Span{{0}, 0, 2}, Calculus::LdiaM);
  EXPECT_EQ(r.interpolant.length(), 1);
}

TEST(Interpolate, LeftRuleSubcases) {
  for (const char* s : {"p q q \\ (p \\ r) => r", "r / q q p p \\ s => (r / q) * (q * s)", "p q (p * q) \\ r => r",
                        "p / (q / r) q / r => p", "p (p \\ q) / r r => q", "s / r r p p \\ q => s * q",
                        "[ boxd p ] p \\ q => q", "dia p dia p \\ q => q", "[ p ] dia p \\ q => q"}) {
    Sequent q = S(s);
    auto p = prove(q, Calculus::Ldia);
    ASSERT_TRUE(p) << s;
    expect_all_partitions(*p, Calculus::Ldia);
    ThinResult t = thin_index(*p, Calculus::Ldia);
    expect_all_partitions(t.proof, Calculus::LdiaM);
    for (const Span& sp : all_spans(t.proof.conclusion.antecedent, false))
      EXPECT_TRUE(verify_thin_eq2(t.proof, sp, Calculus::LdiaM)) << s;
  }
}

TEST(Interpolate, Guarded) {
  for (const char* s : {"dia 1 p => dia 1 * p", "[ ] p => dia 1 * p", "p / dia 1 [ ] => p"}) {
    Sequent q = S(s);
    auto p = prove(q, Calculus::L1starDia);
    ASSERT_TRUE(p) << s;
    for (const Span& sp : all_spans(q.antecedent, false)) {
      auto r = extract_interpolant(*p, sp, Calculus::L1starDia);
      EXPECT_TRUE(verify_interpolant(q, sp, r, Calculus::L1starDia).all()) << s;
      EXPECT_TRUE(is_guarded(r.interpolant)) << s << " gives " << r.interpolant.str();
    }
  }
}

TEST(Family, Interpolants) {
  EXPECT_EQ(a_type(2).str(), "(1 / ((1 / q) \\ 1)) \\ 1");
  for (int i = 1; i <= 3; ++i) {
    Proof p = a_family_proof(i);
    ASSERT_TRUE(check(p, Calculus::L1star)) << i;
    std::size_t n = p.conclusion.antecedent.size();
    auto r = extract_interpolant(p, Span{{}, static_cast<std::size_t>(i), n}, Calculus::L1star);
    EXPECT_EQ(r.interpolant, a_type(i)) << r.interpolant.str();
    EXPECT_TRUE(verify_interpolant(p.conclusion, Span{{}, static_cast<std::size_t>(i), n}, r, Calculus::L1star).all());
  }
}

TEST(Family, Lengths) {
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(a_type(i).length(), 1);
}

TEST(Family, OnlyBaseIsSeparated) {
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(prove_flat(Sequent{Hedge{Tree::leaf(a_type(i))}, a_type(i)}, Calculus::L1star));
    EXPECT_FALSE(prove_flat(Sequent{Hedge{Tree::leaf(a_type(i))}, a_type(0)}, Calculus::L1star)) << i;
  }
  // Y (Y\1) => 1 gives Y => 1/(Y\1), hence (1/(Y\1))\1 => Y\1 with Y = 1/q
  Type y = Type::over(Type::unit(), Type::prim("q"));
  Proof unit_id = build::unit_l(build::unit_r(), {}, 0);
  Proof raise = build::over_r(build::under_l(build::identity(y), unit_id, {}, 0));
  Proof p = build::under_r(build::under_l(raise, unit_id, {}, 0));
  ASSERT_TRUE(check(p, Calculus::L1star));
  EXPECT_EQ(p.conclusion, (Sequent{Hedge{Tree::leaf(a_type(2))}, a_type(1)}));
  EXPECT_TRUE(prove_flat(p.conclusion, Calculus::L1star));
}

#pragma once

#include <stdexcept>

#include "cfg.hpp"
#include "grammar.hpp"
#include "rulesets.hpp"

namespace lambek {

struct CompileOptions {
  RuleSetOptions rules;
  int m_override = 0;                  // 0 uses the grammar's own bound
  std::size_t max_nonterminals = 20000;
};

struct Compiled {
  Cfg cfg;
  RuleSets rules;
};

/// The context-free grammar equivalent to an Ldia grammar (productions from
/// S, dia A -> A, A -> boxd A, lexical rules) or an LstarDia grammar (S',
/// guarded types, and dia 1 -> eps in addition).
inline Compiled compile_grammar(const Grammar& g, Calculus calc, const CompileOptions& opt = {}) {
  if (calc != Calculus::Ldia && calc != Calculus::LstarDia)
    throw std::invalid_argument("compile expects Ldia or LstarDia");
  const bool starred_mode = calc == Calculus::LstarDia;
  const int m = opt.m_override > 0 ? opt.m_override : g.bound();
  std::set<std::string> prims = g.primitives();
  if (enum_types(prims, m, starred_mode).size() > opt.max_nonterminals)
    throw std::runtime_error("too many nonterminals for m = " + std::to_string(m));
  RuleSets rules = build_rulesets(prims, m, starred_mode ? Calculus::L1starDia : Calculus::Ldia, opt.rules);

  Cfg cfg;
  cfg.start = g.distinguished.str();
  for (const Type& t : rules.types) cfg.nonterminals.insert(t.str());
  cfg.nonterminals.insert(cfg.start);
  cfg.terminals = g.alphabet;
  for (const Sequent& s : rules.S) {
    Production p{s.succedent.str(), {}};
    for (const Tree& t : s.antecedent) p.rhs.push_back(Symbol::nt(t.type.str()));
    cfg.add(std::move(p));
  }
  if (starred_mode) {
    cfg.nonterminals.insert(Type::dia(Type::unit()).str());  // missing from N when m < 2
    cfg.add(Production{Type::dia(Type::unit()).str(), {}});
  }
  for (const Type& a : rules.types)
    if (a.length() <= m - 2) cfg.add(Production{Type::dia(a).str(), {Symbol::nt(a.str())}});
  for (const Type& a : rules.types)
    if (a.length() <= m - 2) cfg.add(Production{a.str(), {Symbol::nt(Type::boxdown(a).str())}});
  for (const auto& [word, type] : g.lexicon) {
    cfg.nonterminals.insert(type.str());
    cfg.add(Production{type.str(), {Symbol::t(word)}});
  }
  return Compiled{std::move(cfg), std::move(rules)};
}

inline Cfg compile_cfg(const Grammar& g, Calculus calc, const CompileOptions& opt = {}) {
  return compile_grammar(g, calc, opt).cfg;
}

}  // namespace lambek

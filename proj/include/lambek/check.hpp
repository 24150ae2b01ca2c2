#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "proof.hpp"

namespace lambek {

namespace detail {

/// Tries every way the node's rule could have produced its conclusion from
/// its premises. Returns the matching principal, if any.
inline std::optional<Principal> match_node(const Proof& p, Calculus c) {
  const Sequent& goal = p.conclusion;
  // builders only read premise conclusions, so stubs avoid copying subtrees
  std::vector<Proof> prem;
  for (const Proof& q : p.premises) prem.push_back(Proof{q.conclusion, q.rule, {}, {}});
  auto attempt = [&](const std::function<Proof()>& make) -> std::optional<Principal> {
    try {
      Proof q = make();
      if (q.conclusion == goal) return q.principal;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  };
  auto need = [&](std::size_t n) { return prem.size() == n; };

  switch (p.rule) {
    case Rule::Ax:
      if (!need(0) || !goal.succedent.is(Kind::Prim)) return std::nullopt;
      return attempt([&] { return build::axiom(goal.succedent); });
    case Rule::UnitR:
      if (!need(0) || !has_unit(c)) return std::nullopt;
      return attempt([&] { return build::unit_r(); });
    case Rule::UnderR:
      if (!need(1)) return std::nullopt;
      return attempt([&] { return build::under_r(prem[0]); });
    case Rule::OverR:
      if (!need(1)) return std::nullopt;
      return attempt([&] { return build::over_r(prem[0]); });
    case Rule::ProdR:
      if (!need(2)) return std::nullopt;
      return attempt([&] { return build::prod_r(prem[0], prem[1]); });
    case Rule::DiaR:
      if (!need(1) || !has_brackets(c) || !goal.succedent.is(Kind::Dia)) return std::nullopt;
      return attempt([&] { return build::dia_r(prem[0], goal.succedent.index()); });
    case Rule::BoxDownR:
      if (!need(1) || !has_brackets(c)) return std::nullopt;
      return attempt([&] { return build::box_r(prem[0]); });
    default: break;
  }

  const Hedge& src = prem.empty() ? goal.antecedent : prem.back().conclusion.antecedent;
  if ((p.rule == Rule::UnderL || p.rule == Rule::OverL) ? !need(2) : !need(1)) return std::nullopt;
  if ((p.rule == Rule::UnitL) && !has_unit(c)) return std::nullopt;
  if ((p.rule == Rule::DiaL || p.rule == Rule::BoxDownL) && !has_brackets(c)) return std::nullopt;
  std::set<int> indices;
  collect_indices(goal, indices);
  for (const Path& path : all_paths(src)) {
    const Hedge& at = hedge_at(src, path);
    for (std::size_t pos = 0; pos <= at.size(); ++pos) {
      std::optional<Principal> r;
      switch (p.rule) {
        case Rule::UnitL: r = attempt([&] { return build::unit_l(prem[0], path, pos); }); break;
        case Rule::ProdL: r = attempt([&] { return build::prod_l(prem[0], path, pos); }); break;
        case Rule::DiaL: r = attempt([&] { return build::dia_l(prem[0], path, pos); }); break;
        case Rule::BoxDownL:
          for (int i : indices)
            if (!r) r = attempt([&] { return build::box_l(prem[0], path, pos, i); });
          break;
        case Rule::UnderL: r = attempt([&] { return build::under_l(prem[0], prem[1], path, pos); }); break;
        case Rule::OverL: r = attempt([&] { return build::over_l(prem[0], prem[1], path, pos); }); break;
        default: break;
      }
      if (r) return r;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Copy of `p` with every principal recomputed, or nullopt if some node is
/// not a legal rule instance of `c`. `why` receives the first offending node.
inline std::optional<Proof> annotate(const Proof& p, Calculus c, std::string* why = nullptr) {
  std::string problem = sequent_problem(p.conclusion, c);
  if (!problem.empty()) {
    if (why) *why = str(p.conclusion) + ": " + problem;
    return std::nullopt;
  }
  Proof out{p.conclusion, p.rule, {}, {}};
  for (const Proof& q : p.premises) {
    auto sub = annotate(q, c, why);
    if (!sub) return std::nullopt;
    out.premises.push_back(std::move(*sub));
  }
  auto pr = detail::match_node(out, c);
  if (!pr) {
    if (why) *why = str(p.conclusion) + ": not an instance of " + name(p.rule);
    return std::nullopt;
  }
  out.principal = *pr;
  return out;
}

inline bool check(const Proof& p, Calculus c, std::string* why = nullptr) { return annotate(p, c, why).has_value(); }

}  // namespace lambek

#pragma once

#include <map>
#include <string>

#include "calculus.hpp"
#include "proof.hpp"

namespace lambek {

struct ThinResult {
  Proof proof;
  std::map<std::string, std::string> theta;
  Calculus calculus;
};

namespace detail {

struct ThinCounters {
  int prim = 0;
  int index = 0;
  std::map<std::string, std::string> theta;
};

inline Proof thin_rec(const Proof& p, ThinCounters& k) {
  std::vector<Proof> prem;
  for (const Proof& q : p.premises) prem.push_back(thin_rec(q, k));
  const Principal& at = p.principal;
  switch (p.rule) {
    case Rule::Ax: {
      std::string fresh = "p" + std::to_string(++k.prim);
      k.theta[fresh] = p.conclusion.succedent.name();
      return build::axiom(Type::prim(fresh));
    }
    case Rule::UnitR: return build::unit_r();
    case Rule::UnitL: return build::unit_l(std::move(prem[0]), at.path, at.pos);
    case Rule::ProdL: return build::prod_l(std::move(prem[0]), at.path, at.pos);
    case Rule::ProdR: return build::prod_r(std::move(prem[0]), std::move(prem[1]));
    case Rule::UnderL: return build::under_l(std::move(prem[0]), std::move(prem[1]), at.path, at.split);
    case Rule::OverL: return build::over_l(std::move(prem[0]), std::move(prem[1]), at.path, at.pos);
    case Rule::UnderR: return build::under_r(std::move(prem[0]));
    case Rule::OverR: return build::over_r(std::move(prem[0]));
    case Rule::DiaL: return build::dia_l(std::move(prem[0]), at.path, at.pos);
    case Rule::DiaR: return build::dia_r(std::move(prem[0]), ++k.index);
    case Rule::BoxDownL: return build::box_l(std::move(prem[0]), at.path, at.pos, ++k.index);
    case Rule::BoxDownR: return build::box_r(std::move(prem[0]));
  }
  throw RuleError("unknown rule");
}

}  // namespace detail

/// Re-derives `p` with a fresh primitive per axiom instance and a fresh index
/// per DiaR and BoxDownL instance, numbered in post-order. The conclusion is
/// thin and `theta` maps it back onto the original.
inline ThinResult thin_index(const Proof& p, Calculus c) {
  detail::ThinCounters k;
  Proof q = detail::thin_rec(p, k);
  return ThinResult{std::move(q), std::move(k.theta), indexed_variant(c)};
}

}  // namespace lambek

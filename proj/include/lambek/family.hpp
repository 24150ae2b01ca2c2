#pragma once

#include <stdexcept>
#include <vector>

#include "proof.hpp"

namespace lambek {

/// A_0 = q, A_{i+1} = (1/A_i)\1.
inline Type a_type(int i) {
  Type t = Type::prim("q");
  for (int k = 0; k < i; ++k) t = Type::under(Type::over(Type::unit(), t), Type::unit());
  return t;
}

/// Antecedent (1/1)^{i-1} 1/q q (1\1)^i, for i >= 1.
inline std::vector<Type> a_family_antecedent(int i) {
  if (i < 1) throw std::invalid_argument("family index must be positive");
  Type one = Type::unit(), q = Type::prim("q");
  std::vector<Type> out(static_cast<std::size_t>(i - 1), Type::over(one, one));
  out.push_back(Type::over(one, q));
  out.push_back(q);
  for (int k = 0; k < i; ++k) out.push_back(Type::under(one, one));
  return out;
}

namespace detail {

inline Proof a_family_rec(const std::vector<Type>& ant) {
  Type one = Type::unit();
  Proof unit_id = build::unit_l(build::unit_r(), {}, 0);
  if (ant.size() == 2) return build::over_l(build::axiom(ant[1]), unit_id, {}, 0);
  std::size_t under = 0, over = 0;
  for (const Type& t : ant) {
    if (t == Type::under(one, one)) ++under;
    if (t == Type::over(one, one)) ++over;
  }
  if (under > over) {
    // last 1\1 takes everything before it
    std::vector<Type> rest(ant.begin(), ant.end() - 1);
    return build::under_l(a_family_rec(rest), unit_id, {}, 0);
  }
  std::vector<Type> rest(ant.begin() + 1, ant.end());
  return build::over_l(a_family_rec(rest), unit_id, {}, 0);
}

}  // namespace detail

/// Proof of (1/1)^{i-1} 1/q q (1\1)^i => 1 in L1star, peeling 1\1 from the
/// right and 1/1 from the left alternately.
inline Proof a_family_proof(int i) { return detail::a_family_rec(a_family_antecedent(i)); }

}  // namespace lambek

#pragma once

#include <stdexcept>

#include "cut.hpp"
#include "freegroup.hpp"
#include "interpolate.hpp"
#include "prover.hpp"
#include "thin.hpp"

namespace lambek {

/// Called on every intermediate sequent with the prover's verdict.
using ReduceObserver = std::function<void(const Sequent&, bool provable)>;

namespace detail {

inline CutDerivation pentus_reduce_rec(const Sequent& s, Prover& prover, const ReduceObserver& obs) {
  const Calculus c = prover.calculus();
  const std::size_t n = s.antecedent.size();
  for (const Tree& t : s.antecedent)
    if (!t.is_leaf()) throw std::invalid_argument("pentus_reduce expects a flat sequent");
  auto p = prover.prove(s);
  if (obs) obs(s, p.has_value());
  if (!p) throw std::invalid_argument("not provable: " + str(s));
  if (n <= 2) return cut_leaf(s);

  ThinResult th = thin_index(*p, c);
  const Sequent& ts = th.proof.conclusion;
  std::vector<GroupWord> words;
  for (const Tree& t : ts.antecedent) words.push_back(interpret(t.type));
  words.push_back(inv(interpret(ts.succedent)));
  const std::size_t k = pentus_split(words);

  auto deindexed = [&](const Span& sel) {
    auto r = extract_interpolant(th.proof, sel, th.calculus);
    return deindex(r.interpolant, th.theta);
  };
  if (k < n) {
    // adjacent pair A_k A_{k+1}
    Type e = deindexed(Span{{}, k - 1, k + 1});
    Sequent pair{Hedge{s.antecedent[k - 1], s.antecedent[k]}, e};
    Sequent rest{splice(s.antecedent, Span{{}, k - 1, k + 1}, Hedge{Tree::leaf(e)}), s.succedent};
    CutDerivation left = pentus_reduce_rec(pair, prover, obs);
    CutDerivation right = pentus_reduce_rec(rest, prover, obs);
    return cut(std::move(left), std::move(right), {}, k - 1);
  }
  // prefix A_1 ... A_{n-1}
  Type e = deindexed(Span{{}, 0, n - 1});
  Sequent prefix{slice(s.antecedent, Span{{}, 0, n - 1}), e};
  Sequent last{Hedge{Tree::leaf(e), s.antecedent[n - 1]}, s.succedent};
  CutDerivation left = pentus_reduce_rec(prefix, prover, obs);
  CutDerivation right = pentus_reduce_rec(last, prover, obs);
  return cut(std::move(left), std::move(right), {}, 0);
}

}  // namespace detail

/// Derivation of a provable flat sequent from short sequents by Cut alone,
/// splitting where the group images allow (Ldia, or L1starDia on guarded
/// types).
inline CutDerivation pentus_reduce(const Sequent& s, Prover& prover, const ReduceObserver& obs = {}) {
  return detail::pentus_reduce_rec(s, prover, obs);
}

inline CutDerivation pentus_reduce(const Sequent& s, Calculus c, long timeout_ms = 0,
                                   const ReduceObserver& obs = {}) {
  Prover prover(c, timeout_ms);
  return detail::pentus_reduce_rec(s, prover, obs);
}

}  // namespace lambek

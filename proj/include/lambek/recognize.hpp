#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "freegroup.hpp"
#include "grammar.hpp"
#include "prover.hpp"

namespace lambek {

struct Recognition {
  bool member = false;
  std::optional<Sequent> witness;
  // a provable sequent with more brackets than the budget; should never exist
  std::optional<Sequent> over_budget;
  long hedges = 0;
  long prover_calls = 0;
};

struct RecognizeOptions {
  long timeout_ms = 0;
  bool check_budget = true;  // also search at budget + 1 brackets
};

/// Decides w in L(G) directly: every lexical assignment, every hedge over it
/// with at most as many bracket pairs as modality occurrences in the
/// sequent, and the prover.
inline Recognition recognize(const Grammar& g, const std::vector<std::string>& w, Calculus calc, Prover& prover,
                             const RecognizeOptions& opt = {}) {
  Recognition out;
  std::vector<std::vector<Type>> choices;
  for (const auto& a : w) {
    choices.push_back(g.types_of(a));
    if (choices.back().empty()) return out;
  }
  const bool empty_ok = starred(calc);
  const GroupWord target = interpret_plain(g.distinguished);
  std::vector<std::size_t> ix(w.size(), 0);
  for (;;) {
    std::vector<Type> ys;
    for (std::size_t i = 0; i < w.size(); ++i) ys.push_back(choices[i][ix[i]]);
    const int budget = bracket_budget(ys, g.distinguished);
    const int top = opt.check_budget ? budget + 1 : budget;
    for (int b = 0; b <= top; ++b) {
      if (b <= budget && out.member) continue;
      if (b > budget && out.over_budget) break;
      for (const Hedge& h : enum_hedges(ys, b, empty_ok)) {
        ++out.hedges;
        if (h.empty() && !empty_ok) continue;
        if (interpret_plain(h) != target) continue;
        Sequent s{h, g.distinguished};
        ++out.prover_calls;
        if (!prover.provable(s)) continue;
        if (b <= budget) {
          out.member = true;
          out.witness = s;
        } else {
          out.over_budget = s;
        }
        break;
      }
    }
    std::size_t i = w.size();
    while (i > 0 && ++ix[i - 1] == choices[i - 1].size()) ix[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline Recognition recognize(const Grammar& g, const std::vector<std::string>& w, Calculus calc,
                             const RecognizeOptions& opt = {}) {
  Prover prover(calc, opt.timeout_ms);
  return recognize(g, w, calc, prover, opt);
}

/// All strings over the alphabet of length at most n, shortest first.
inline std::vector<std::vector<std::string>> strings_upto(const std::set<std::string>& alphabet, std::size_t n) {
  std::vector<std::vector<std::string>> out{{}};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t to = out.size();
    for (std::size_t k = from; k < to; ++k)
      for (const auto& a : alphabet) {
        auto v = out[k];
        v.push_back(a);
        out.push_back(std::move(v));
      }
    from = to;
  }
  return out;
}

}  // namespace lambek

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hedge.hpp"

namespace lambek {

/// All types over `prims` of length at most m, ordered by length then by
/// printed form. Guarded mode adds dia 1 as an atom of length 2.
inline std::vector<Type> enum_types(const std::set<std::string>& prims, int m, bool guarded) {
  std::vector<std::vector<Type>> by_len(static_cast<std::size_t>(std::max(m, 0) + 1));
  for (int l = 1; l <= m; ++l) {
    std::set<std::string> seen;
    std::vector<Type>& out = by_len[static_cast<std::size_t>(l)];
    auto add = [&](Type t) {
      if (seen.insert(t.str()).second) out.push_back(std::move(t));
    };
    if (l == 1)
      for (const auto& p : prims) add(Type::prim(p));
    if (l == 2 && guarded) add(Type::dia(Type::unit()));
    if (l > 2)
      for (const Type& a : by_len[static_cast<std::size_t>(l - 2)]) {
        add(Type::dia(a));
        add(Type::boxdown(a));
      }
    for (int a = 1; a < l; ++a)
      for (const Type& x : by_len[static_cast<std::size_t>(a)])
        for (const Type& y : by_len[static_cast<std::size_t>(l - a)]) {
          add(Type::under(x, y));
          add(Type::over(x, y));
          add(Type::prod(x, y));
        }
    std::sort(out.begin(), out.end(), [](const Type& x, const Type& y) { return x.str() < y.str(); });
  }
  std::vector<Type> all;
  for (auto& v : by_len) all.insert(all.end(), v.begin(), v.end());
  return all;
}

/// Tuples of `k` elements drawn from `pool`, in lexicographic index order.
template <class T>
void for_each_tuple(const std::vector<T>& pool, std::size_t k, const std::function<void(const std::vector<T>&)>& f) {
  std::vector<std::size_t> ix(k, 0);
  std::vector<T> cur(k);
  if (k > 0 && pool.empty()) return;
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = pool[ix[i]];
    f(cur);
    std::size_t i = k;
    while (i > 0 && ++ix[i - 1] == pool.size()) ix[--i] = 0;
    if (i == 0) return;
  }
}

namespace detail {

class HedgeEnumerator {
 public:
  HedgeEnumerator(const std::vector<Type>& yield, bool allow_empty) : yield_(yield), empty_(allow_empty) {}

  // hedges over yield[i, j) with exactly b bracket pairs
  const std::vector<Hedge>& hedges(std::size_t i, std::size_t j, int b) {
    auto key = std::make_tuple(i, j, b);
    auto it = h_.find(key);
    if (it != h_.end()) return it->second;
    std::vector<Hedge> out;
    if (i == j && b == 0) out.push_back(Hedge{});
    // first tree covers [i, k) with b1 brackets
    for (std::size_t k = i; k <= j; ++k)
      for (int b1 = 0; b1 <= b; ++b1) {
        if (k == i && b1 == 0) continue;
        const auto& first = trees(i, k, b1);
        if (first.empty()) continue;
        const auto& rest = hedges(k, j, b - b1);
        for (const Tree& t : first)
          for (const Hedge& r : rest) {
            Hedge h;
            h.reserve(r.size() + 1);
            h.push_back(t);
            h.insert(h.end(), r.begin(), r.end());
            out.push_back(std::move(h));
          }
      }
    return h_[key] = std::move(out);
  }

  const std::vector<Tree>& trees(std::size_t i, std::size_t j, int b) {
    auto key = std::make_tuple(i, j, b);
    auto it = t_.find(key);
    if (it != t_.end()) return it->second;
    std::vector<Tree> out;
    if (b == 0 && j == i + 1) out.push_back(Tree::leaf(yield_[i]));
    if (b >= 1 && (i < j || empty_))
      for (const Hedge& h : hedges(i, j, b - 1)) out.push_back(Tree::bracket(h));
    return t_[key] = std::move(out);
  }

 private:
  const std::vector<Type>& yield_;
  bool empty_;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<Hedge>> h_;
  std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<Tree>> t_;
};

}  // namespace detail

/// Every hedge with the given yield and exactly `brackets` bracket pairs.
/// Empty bracket pairs appear only if `allow_empty`.
inline std::vector<Hedge> enum_hedges(const std::vector<Type>& yield, int brackets, bool allow_empty) {
  detail::HedgeEnumerator e(yield, allow_empty);
  return e.hedges(0, yield.size(), brackets);
}

/// Upper bound on bracket pairs in a provable sequent: each pair is removed
/// by a distinct modality occurrence.
inline int bracket_budget(const std::vector<Type>& yield, const Type& succedent) {
  int k = modality_count(succedent);
  for (const Type& t : yield) k += modality_count(t);
  return k;
}

}  // namespace lambek

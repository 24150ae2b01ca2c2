#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "calculus.hpp"
#include "freegroup.hpp"
#include "proof.hpp"

namespace lambek {

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("prover time limit exceeded") {}
};

/// One backward rule instance: the premises it would need.
struct Alternative {
  Rule rule;
  Principal principal;
  std::vector<Sequent> premises;
  bool invertible = false;
};

namespace detail {

inline Hedge replaced(const Hedge& h, const Path& path, std::size_t b, std::size_t e, Hedge with) {
  return splice(h, Span{path, b, e}, with);
}

/// Calls `f` on every backward rule instance of `s`, in the canonical order,
/// until it returns true.
inline void for_each_alternative(const Sequent& s, Calculus c, const std::function<bool(Alternative&&)>& f) {
  const Hedge& ant = s.antecedent;
  const Type& goal = s.succedent;
  const bool star = starred(c);
  const std::size_t n = ant.size();

  if (goal.is(Kind::Prim) && n == 1 && ant[0].is_leaf() && ant[0].type == goal)
    if (f(Alternative{Rule::Ax, {}, {}, false})) return;
  if (goal.is(Kind::Unit) && n == 0 && has_unit(c))
    if (f(Alternative{Rule::UnitR, {}, {}, false})) return;

  switch (goal.kind()) {
    case Kind::Under: {
      if (!star && n == 0) break;
      Hedge h{Tree::leaf(goal.left())};
      h.insert(h.end(), ant.begin(), ant.end());
      if (f(Alternative{Rule::UnderR, {}, {Sequent{std::move(h), goal.right()}}, true})) return;
      break;
    }
    case Kind::Over: {
      if (!star && n == 0) break;
      Hedge h = ant;
      h.push_back(Tree::leaf(goal.right()));
      if (f(Alternative{Rule::OverR, {}, {Sequent{std::move(h), goal.left()}}, true})) return;
      break;
    }
    case Kind::Prod:
      for (std::size_t k = 0; k <= n; ++k) {
        if (!star && (k == 0 || k == n)) continue;
        Hedge l(ant.begin(), ant.begin() + static_cast<std::ptrdiff_t>(k));
        Hedge r(ant.begin() + static_cast<std::ptrdiff_t>(k), ant.end());
        if (f(Alternative{Rule::ProdR, Principal{{}, 0, k},
                          {Sequent{std::move(l), goal.left()}, Sequent{std::move(r), goal.right()}}, false}))
          return;
      }
      break;
    case Kind::Dia:
      if (has_brackets(c) && n == 1 && ant[0].is_bracket() && ant[0].index == goal.index())
        if (f(Alternative{Rule::DiaR, {}, {Sequent{ant[0].children, goal.body()}}, false})) return;
      break;
    case Kind::BoxDown:
      if (has_brackets(c) && (star || n > 0))
        if (f(Alternative{Rule::BoxDownR, {}, {Sequent{Hedge{Tree::bracket(ant, goal.index())}, goal.body()}}, true}))
          return;
      break;
    default: break;
  }

  for (const Path& path : all_paths(ant)) {
    const Hedge& at = hedge_at(ant, path);
    const std::size_t len = at.size();
    for (std::size_t j = 0; j < len; ++j) {
      const Tree& t = at[j];
      if (t.is_bracket()) {
        if (has_brackets(c) && t.children.size() == 1 && t.children[0].is_leaf() &&
            t.children[0].type.is(Kind::BoxDown) && t.children[0].type.index() == t.index) {
          Hedge h = replaced(ant, path, j, j + 1, Hedge{Tree::leaf(t.children[0].type.body())});
          if (f(Alternative{Rule::BoxDownL, Principal{path, j, 0}, {Sequent{std::move(h), goal}}, false})) return;
        }
        continue;
      }
      if (!t.is_leaf()) continue;
      const Type& a = t.type;
      switch (a.kind()) {
        case Kind::Prod: {
          Hedge h = replaced(ant, path, j, j + 1, Hedge{Tree::leaf(a.left()), Tree::leaf(a.right())});
          if (f(Alternative{Rule::ProdL, Principal{path, j, 0}, {Sequent{std::move(h), goal}}, true})) return;
          break;
        }
        case Kind::Dia: {
          if (!has_brackets(c)) break;
          Hedge h = replaced(ant, path, j, j + 1, Hedge{Tree::bracket(Hedge{Tree::leaf(a.body())}, a.index())});
          if (f(Alternative{Rule::DiaL, Principal{path, j, 0}, {Sequent{std::move(h), goal}}, true})) return;
          break;
        }
        case Kind::Unit: {
          if (!has_unit(c)) break;
          Hedge h = replaced(ant, path, j, j + 1, Hedge{});
          if (f(Alternative{Rule::UnitL, Principal{path, j, 0}, {Sequent{std::move(h), goal}}, true})) return;
          break;
        }
        case Kind::Under:
          for (std::size_t g = 0; g <= j; ++g) {
            if (!star && g == j) continue;
            Hedge gam(at.begin() + static_cast<std::ptrdiff_t>(g), at.begin() + static_cast<std::ptrdiff_t>(j));
            Hedge rest = replaced(ant, path, g, j + 1, Hedge{Tree::leaf(a.right())});
            if (f(Alternative{Rule::UnderL, Principal{path, j, g},
                              {Sequent{std::move(gam), a.left()}, Sequent{std::move(rest), goal}}, false}))
              return;
          }
          break;
        case Kind::Over:
          for (std::size_t e = j + 1; e <= len; ++e) {
            if (!star && e == j + 1) continue;
            Hedge gam(at.begin() + static_cast<std::ptrdiff_t>(j + 1), at.begin() + static_cast<std::ptrdiff_t>(e));
            Hedge rest = replaced(ant, path, j, e, Hedge{Tree::leaf(a.left())});
            if (f(Alternative{Rule::OverL, Principal{path, j, e},
                              {Sequent{std::move(gam), a.right()}, Sequent{std::move(rest), goal}}, false}))
              return;
          }
          break;
        default: break;
      }
    }
  }
}

}  // namespace detail

/// Backward cut-free proof search with a memo that persists across queries
/// for the same calculus. The first successful alternative in the canonical
/// order gives the canonical proof.
class Prover {
 public:
  explicit Prover(Calculus c, long timeout_ms = 0) : calc_(c), timeout_ms_(timeout_ms) {}

  Calculus calculus() const { return calc_; }
  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

  bool provable(const Sequent& s) {
    require_well_formed(s);
    start_clock();
    return decide(s);
  }

  std::optional<Proof> prove(const Sequent& s) {
    require_well_formed(s);
    start_clock();
    if (!decide(s)) return std::nullopt;
    return build(s);
  }

 private:
  void require_well_formed(const Sequent& s) const {
    std::string e = sequent_problem(s, calc_);
    if (!e.empty()) throw std::invalid_argument("ill-formed sequent " + str(s) + ": " + e);
  }

  void start_clock() {
    if (timeout_ms_ > 0) deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms_);
  }

  void tick() {
    if (timeout_ms_ > 0 && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) throw Timeout();
  }

  bool decide(const Sequent& s) {
    std::string key = str(s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second == 1;
    tick();
    memo_[key] = 2;  // in progress counts as failure on re-entry
    bool ok = false;
    if (!has_empty_bracket(s.antecedent) || starred(calc_)) {
      if (interpret_plain(s.antecedent) == interpret_plain(s.succedent)) ok = search(s);
    }
    memo_[key] = ok ? 1 : 0;
    return ok;
  }

  bool search(const Sequent& s) {
    // an invertible rule decides the sequent on its own
    std::optional<bool> decided;
    detail::for_each_alternative(s, calc_, [&](Alternative&& a) {
      if (!a.invertible) return false;
      decided = decide(a.premises[0]);
      return true;
    });
    if (decided) return *decided;
    bool ok = false;
    detail::for_each_alternative(s, calc_, [&](Alternative&& a) {
      for (const Sequent& p : a.premises)
        if (!decide(p)) return false;
      ok = true;
      return true;
    });
    return ok;
  }

  Proof build(const Sequent& s) {
    std::optional<Proof> out;
    detail::for_each_alternative(s, calc_, [&](Alternative&& a) {
      for (const Sequent& p : a.premises)
        if (!decide(p)) return false;
      Proof node{s, a.rule, a.principal, {}};
      for (const Sequent& p : a.premises) node.premises.push_back(build(p));
      if (a.rule == Rule::ProdR) node.principal.split = node.premises[0].conclusion.antecedent.size();
      out = std::move(node);
      return true;
    });
    if (!out) throw std::logic_error("proof reconstruction failed for " + str(s));
    return std::move(*out);
  }

  Calculus calc_;
  long timeout_ms_;
  std::chrono::steady_clock::time_point deadline_{};
  unsigned long ticks_ = 0;
  std::unordered_map<std::string, char> memo_;
};

inline std::optional<Proof> prove(const Sequent& s, Calculus c, long timeout_ms = 0) {
  Prover p(c, timeout_ms);
  return p.prove(s);
}

inline bool provable(const Sequent& s, Calculus c, long timeout_ms = 0) {
  Prover p(c, timeout_ms);
  return p.provable(s);
}

/// Bracket-free fragment: same engine with bracket rules unavailable.
inline std::optional<Proof> prove_flat(const Sequent& s, Calculus c, long timeout_ms = 0) {
  if (c != Calculus::L && c != Calculus::Lstar && c != Calculus::L1star)
    throw std::invalid_argument("prove_flat expects L, Lstar or L1star");
  return prove(s, c, timeout_ms);
}

/// Translation into the bracket-free calculus, using the
/// reserved primitives m and n.
inline Type translate_flat(const Type& t) {
  std::set<std::string> prims;
  collect_primitives(t, prims);
  if (prims.count("m") || prims.count("n")) throw std::invalid_argument("type already uses m or n");
  std::function<Type(const Type&)> tr = [&](const Type& a) -> Type {
    switch (a.kind()) {
      case Kind::Prim:
      case Kind::Unit: return a;
      case Kind::Under: return Type::under(tr(a.left()), tr(a.right()));
      case Kind::Over: return Type::over(tr(a.left()), tr(a.right()));
      case Kind::Prod: return Type::prod(tr(a.left()), tr(a.right()));
      case Kind::Dia: return Type::prod(Type::prim("m"), Type::prod(tr(a.body()), Type::prim("n")));
      case Kind::BoxDown: return Type::over(Type::under(Type::prim("m"), tr(a.body())), Type::prim("n"));
    }
    return a;
  };
  return tr(t);
}

}  // namespace lambek

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calculus.hpp"
#include "check.hpp"
#include "freegroup.hpp"
#include "proof.hpp"

namespace lambek {

struct InterpolationResult {
  Type interpolant;
  Proof left_proof;   // Delta => E
  Proof right_proof;  // Gamma[E] => C
};

/// Outcome of conditions (i)-(iv) for one extraction.
struct InterpolationCheck {
  bool left_ok = false;
  bool right_ok = false;
  bool sigma_ok = false;
  bool tau_ok = false;
  bool all() const { return left_ok && right_ok && sigma_ok && tau_ok; }
};

class InterpolationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool proper_prefix(const Path& a, const Path& b) {
  return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

enum class Rel { Containing, Disjoint, Inside };

/// How the selection relates to the tree at (q, t).
inline Rel relate(const Span& s, const Path& q, std::size_t t) {
  if (s.path == q) return (s.begin <= t && t < s.end) ? Rel::Containing : Rel::Disjoint;
  if (proper_prefix(s.path, q)) {
    std::size_t y = q[s.path.size()];
    return (s.begin <= y && y < s.end) ? Rel::Containing : Rel::Disjoint;
  }
  if (proper_prefix(q, s.path)) return s.path[q.size()] == t ? Rel::Inside : Rel::Disjoint;
  return Rel::Disjoint;
}

/// Conclusion span to premise span, when the tree at (q, t) becomes k trees.
inline Span through_edit(Span s, const Path& q, std::size_t t, std::size_t k) {
  if (s.path == q) {
    if (s.begin > t) s.begin = s.begin + k - 1;
    if (s.end > t) s.end = s.end + k - 1;
  } else if (proper_prefix(q, s.path)) {
    std::size_t& x = s.path[q.size()];
    if (x > t) x = x + k - 1;
  }
  return s;
}

struct Site {
  Path path;
  std::size_t pos;
};

/// Position (q, t) relative to the selected hedge, which contains it.
inline Site relative(const Span& s, const Path& q, std::size_t t) {
  if (s.path == q) return Site{{}, t - s.begin};
  Path r(q.begin() + static_cast<std::ptrdiff_t>(s.path.size()), q.end());
  r[0] -= s.begin;
  return Site{r, t};
}

/// Position (q, t) after the selection, disjoint from it, shrinks to one tree.
inline Site collapsed(const Span& s, Path q, std::size_t t) {
  std::size_t w = s.end - s.begin;
  if (s.path == q) {
    if (t >= s.end) t = t - w + 1;
  } else if (proper_prefix(s.path, q)) {
    std::size_t& y = q[s.path.size()];
    if (y >= s.end) y = y - w + 1;
  }
  return Site{std::move(q), t};
}

inline bool all_guarded(const Hedge& h) {
  for (const Tree& t : h) {
    if (t.is_leaf() && !is_guarded(t.type)) return false;
    if (t.is_bracket() && !all_guarded(t.children)) return false;
  }
  return true;
}

class Interpolator {
 public:
  Interpolator(Calculus c, bool guarded) : calc_(c), unit_(has_unit(c)), guarded_(guarded) {}

  InterpolationResult run(const Proof& p, const Span& s) {
    const Hedge& ant = p.conclusion.antecedent;
    const Hedge& at = hedge_at(ant, s.path);
    if (s.begin > s.end || s.end > at.size()) throw InterpolationError("selection out of range");

    if (s.empty()) {
      if (!unit_) throw InterpolationError("empty selection outside a unit calculus");
      return {Type::unit(), build::unit_r(), build::unit_l(p, s.path, s.begin)};
    }
    if (guarded_ && s.end == s.begin + 1) {
      const Tree& t = at[s.begin];
      if (t.is_bracket() && t.children.empty()) {
        Type e = Type::dia(Type::unit(), t.index);
        Path inner = s.path;
        inner.push_back(s.begin);
        return {e, build::dia_r(build::unit_r(), t.index), build::dia_l(build::unit_l(p, inner, 0), s.path, s.begin)};
      }
      if (t.is_leaf() && t.type.is(Kind::Dia) && t.type.body().is(Kind::Unit))
        return {t.type, build::identity(t.type), p};
    }

    switch (p.rule) {
      case Rule::Ax: return {p.conclusion.succedent, p, p};
      case Rule::UnitR: throw InterpolationError("nonempty selection in an empty antecedent");
      case Rule::UnitL: return single(p, s, 0);
      case Rule::ProdL: return single(p, s, 2);
      case Rule::DiaL: return single(p, s, 1);
      case Rule::BoxDownL: return single(p, s, 1);
      case Rule::UnderL: return under_left(p, s);
      case Rule::OverL: return over_left(p, s);
      case Rule::ProdR: return prod_right(p, s);
      case Rule::UnderR: {
        Span t = s;
        if (t.path.empty()) {
          ++t.begin;
          ++t.end;
        } else {
          ++t.path[0];
        }
        auto r = run(p.premises[0], t);
        return {r.interpolant, std::move(r.left_proof), build::under_r(std::move(r.right_proof))};
      }
      case Rule::OverR: {
        auto r = run(p.premises[0], s);
        return {r.interpolant, std::move(r.left_proof), build::over_r(std::move(r.right_proof))};
      }
      case Rule::BoxDownR: {
        Span t = s;
        t.path.insert(t.path.begin(), 0);
        auto r = run(p.premises[0], t);
        return {r.interpolant, std::move(r.left_proof), build::box_r(std::move(r.right_proof))};
      }
      case Rule::DiaR: {
        int idx = p.conclusion.succedent.index();
        if (s.path.empty()) {
          const Proof& q = p.premises[0];
          auto r = run(q, Span{{}, 0, q.conclusion.antecedent.size()});
          Type e = Type::dia(r.interpolant, idx);
          return {e, build::dia_r(std::move(r.left_proof), idx),
                  build::dia_l(build::dia_r(std::move(r.right_proof), idx), {}, 0)};
        }
        Span t = s;
        t.path.erase(t.path.begin());
        auto r = run(p.premises[0], t);
        return {r.interpolant, std::move(r.left_proof), build::dia_r(std::move(r.right_proof), idx)};
      }
    }
    throw InterpolationError("unknown rule");
  }

 private:
  // Left rules with one premise: the tree at (Q, t) becomes k trees.
  InterpolationResult single(const Proof& p, const Span& s, std::size_t k) {
    const Path& q = p.principal.path;
    std::size_t t = p.principal.pos;
    const Proof& prem = p.premises[0];
    Rel rel = relate(s, q, t);

    if (rel == Rel::Inside) {
      // only BoxDownL: the selection is the lone leaf inside the bracket
      if (p.rule != Rule::BoxDownL || s.begin != 0 || s.end != 1)
        throw InterpolationError("selection inside a principal leaf");
      int idx = hedge_at(p.conclusion.antecedent, q)[t].index;
      auto r = run(prem, Span{q, t, t + 1});
      Type e = Type::boxdown(r.interpolant, idx);
      return {e, build::box_r(build::box_l(std::move(r.left_proof), {}, 0, idx)),
              build::box_l(std::move(r.right_proof), q, t, idx)};
    }

    Span ps = through_edit(s, q, t, k);
    auto r = run(prem, ps);
    if (rel == Rel::Containing) {
      Site at = relative(ps, q, t);
      return {r.interpolant, reapply(p, std::move(r.left_proof), at), std::move(r.right_proof)};
    }
    Site at = collapsed(ps, q, t);
    return {r.interpolant, std::move(r.left_proof), reapply(p, std::move(r.right_proof), at)};
  }

  static Proof reapply(const Proof& p, Proof prem, const Site& at) {
    switch (p.rule) {
      case Rule::UnitL: return build::unit_l(std::move(prem), at.path, at.pos);
      case Rule::ProdL: return build::prod_l(std::move(prem), at.path, at.pos);
      case Rule::DiaL: return build::dia_l(std::move(prem), at.path, at.pos);
      case Rule::BoxDownL: {
        int idx = hedge_at(p.conclusion.antecedent, p.principal.path)[p.principal.pos].index;
        return build::box_l(std::move(prem), at.path, at.pos, idx);
      }
      default: throw InterpolationError("not a one-premise left rule");
    }
  }

  InterpolationResult under_left(const Proof& p, const Span& s) {
    const Path& q = p.principal.path;
    const std::size_t j = p.principal.pos, g = p.principal.split, d = j - g;
    const Proof& lp = p.premises[0];
    const Proof& rp = p.premises[1];
    const std::size_t b = s.begin, e = s.end;

    enum { Contain, Disjoint, Inside, Sub2, Sub3 } kind = Disjoint;
    Span rs = s;  // span in the right premise
    Span ls;      // span in the left premise
    if (s.path == q) {
      if (b <= g && e >= j + 1) {
        kind = Contain;
        rs.end = e - d;
      } else if (e <= g || b >= j + 1) {
        kind = Disjoint;
        if (b >= j + 1) {
          rs.begin = b - d;
          rs.end = e - d;
        }
      } else if (g <= b && e <= j) {
        kind = Inside;
        ls = Span{{}, b - g, e - g};
      } else if (g < b && b <= j && e > j) {
        kind = Sub2;
      } else {
        kind = Sub3;
      }
    } else if (proper_prefix(q, s.path)) {
      std::size_t x = s.path[q.size()];
      if (g <= x && x < j) {
        kind = Inside;
        ls = s;
        ls.path.erase(ls.path.begin(), ls.path.begin() + static_cast<std::ptrdiff_t>(q.size()));
        ls.path[0] = x - g;
      } else if (x > j) {
        rs.path[q.size()] = x - d;
      }
    } else if (proper_prefix(s.path, q)) {
      std::size_t y = q[s.path.size()];
      if (b <= y && y < e) kind = Contain;
    }

    switch (kind) {
      case Contain: {
        auto r = run(rp, rs);
        Site at = relative(rs, q, g);
        return {r.interpolant, build::under_l(lp, std::move(r.left_proof), at.path, at.pos), std::move(r.right_proof)};
      }
      case Disjoint: {
        auto r = run(rp, rs);
        Site at = collapsed(rs, q, g);
        return {r.interpolant, std::move(r.left_proof), build::under_l(lp, std::move(r.right_proof), at.path, at.pos)};
      }
      case Inside: {
        auto r = run(lp, ls);
        return {r.interpolant, std::move(r.left_proof), build::under_l(std::move(r.right_proof), rp, q, g)};
      }
      case Sub2: {
        // Gamma1 | Gamma2 A\B Delta2 : E = G \ F
        auto rl = run(lp, Span{{}, 0, b - g});
        auto rr = run(rp, Span{q, g, g + e - j});
        Type ty = Type::under(rl.interpolant, rr.interpolant);
        Proof left = build::under_r(build::under_l(std::move(rl.right_proof), std::move(rr.left_proof), {}, 0));
        Proof right = build::under_l(std::move(rl.left_proof), std::move(rr.right_proof), q, g);
        return {ty, std::move(left), std::move(right)};
      }
      case Sub3: {
        // Pi2 Gamma1 selected, Gamma2 A\B outside: E = E' * F
        auto rl = run(lp, Span{{}, 0, e - g});
        auto rr = run(rp, Span{q, b, g});
        Type ty = Type::prod(rr.interpolant, rl.interpolant);
        Proof left = build::prod_r(std::move(rr.left_proof), std::move(rl.left_proof));
        Proof right =
            build::prod_l(build::under_l(std::move(rl.right_proof), std::move(rr.right_proof), q, b + 1), q, b);
        return {ty, std::move(left), std::move(right)};
      }
    }
    throw InterpolationError("unreachable");
  }

  InterpolationResult over_left(const Proof& p, const Span& s) {
    const Path& q = p.principal.path;
    const std::size_t j = p.principal.pos, g = p.principal.split, d = g - j - 1;
    const Proof& lp = p.premises[0];
    const Proof& rp = p.premises[1];
    const std::size_t b = s.begin, e = s.end;

    enum { Contain, Disjoint, Inside, Sub2, Sub3 } kind = Disjoint;
    Span rs = s;
    Span ls;
    if (s.path == q) {
      if (b <= j && e >= g) {
        kind = Contain;
        rs.end = e - d;
      } else if (e <= j || b >= g) {
        kind = Disjoint;
        if (b >= g) {
          rs.begin = b - d;
          rs.end = e - d;
        }
      } else if (j + 1 <= b && e <= g) {
        kind = Inside;
        ls = Span{{}, b - j - 1, e - j - 1};
      } else if (b <= j && e < g) {
        kind = Sub2;
      } else {
        kind = Sub3;
      }
    } else if (proper_prefix(q, s.path)) {
      std::size_t x = s.path[q.size()];
      if (j < x && x < g) {
        kind = Inside;
        ls = s;
        ls.path.erase(ls.path.begin(), ls.path.begin() + static_cast<std::ptrdiff_t>(q.size()));
        ls.path[0] = x - j - 1;
      } else if (x >= g) {
        rs.path[q.size()] = x - d;
      }
    } else if (proper_prefix(s.path, q)) {
      std::size_t y = q[s.path.size()];
      if (b <= y && y < e) kind = Contain;
    }

    switch (kind) {
      case Contain: {
        auto r = run(rp, rs);
        Site at = relative(rs, q, j);
        return {r.interpolant, build::over_l(lp, std::move(r.left_proof), at.path, at.pos), std::move(r.right_proof)};
      }
      case Disjoint: {
        auto r = run(rp, rs);
        Site at = collapsed(rs, q, j);
        return {r.interpolant, std::move(r.left_proof), build::over_l(lp, std::move(r.right_proof), at.path, at.pos)};
      }
      case Inside: {
        auto r = run(lp, ls);
        return {r.interpolant, std::move(r.left_proof), build::over_l(std::move(r.right_proof), rp, q, j)};
      }
      case Sub2: {
        // Pi2 B/A Gamma1 selected, Gamma2 outside: E = F / G
        auto rl = run(lp, Span{{}, e - j - 1, g - j - 1});
        auto rr = run(rp, Span{q, b, j + 1});
        Type ty = Type::over(rr.interpolant, rl.interpolant);
        Proof left = build::over_r(build::over_l(std::move(rl.right_proof), std::move(rr.left_proof), {}, j - b));
        Proof right = build::over_l(std::move(rl.left_proof), std::move(rr.right_proof), q, b);
        return {ty, std::move(left), std::move(right)};
      }
      case Sub3: {
        // Gamma2 Pi2 selected: E = F' * E'
        auto rl = run(lp, Span{{}, b - j - 1, g - j - 1});
        auto rr = run(rp, Span{q, j + 1, e - g + j + 1});
        Type ty = Type::prod(rl.interpolant, rr.interpolant);
        Proof left = build::prod_r(std::move(rl.left_proof), std::move(rr.left_proof));
        Proof right =
            build::prod_l(build::over_l(std::move(rl.right_proof), std::move(rr.right_proof), q, j), q, b);
        return {ty, std::move(left), std::move(right)};
      }
    }
    throw InterpolationError("unreachable");
  }

  InterpolationResult prod_right(const Proof& p, const Span& s) {
    const std::size_t k = p.principal.split;
    const Proof& lp = p.premises[0];
    const Proof& rp = p.premises[1];
    bool in_left, in_right;
    if (!s.path.empty()) {
      in_left = s.path[0] < k;
      in_right = !in_left;
    } else {
      in_left = s.end <= k;
      in_right = s.begin >= k;
    }
    if (in_left) {
      auto r = run(lp, s);
      return {r.interpolant, std::move(r.left_proof), build::prod_r(std::move(r.right_proof), rp)};
    }
    if (in_right) {
      Span t = s;
      if (t.path.empty()) {
        t.begin -= k;
        t.end -= k;
      } else {
        t.path[0] -= k;
      }
      auto r = run(rp, t);
      return {r.interpolant, std::move(r.left_proof), build::prod_r(lp, std::move(r.right_proof))};
    }
    auto rl = run(lp, Span{{}, s.begin, k});
    auto rr = run(rp, Span{{}, 0, s.end - k});
    Type ty = Type::prod(rl.interpolant, rr.interpolant);
    Proof left = build::prod_r(std::move(rl.left_proof), std::move(rr.left_proof));
    Proof right = build::prod_l(build::prod_r(std::move(rl.right_proof), std::move(rr.right_proof)), {}, s.begin);
    return {ty, std::move(left), std::move(right)};
  }

  Calculus calc_;
  bool unit_;
  bool guarded_;
};

}  // namespace detail

/// Guarded mode applies in unit calculi when every type of the conclusion is guarded.
inline bool guarded_mode(const Sequent& s, Calculus c) {
  return has_unit(c) && is_guarded(s.succedent) && detail::all_guarded(s.antecedent);
}

/// Interpolant for the selection `sel` of the antecedent of `p`. The proof
/// must carry principal positions (from the prover, thin_index or annotate).
inline InterpolationResult extract_interpolant(const Proof& p, const Span& sel, Calculus c) {
  detail::Interpolator in(c, guarded_mode(p.conclusion, c));
  return in.run(p, sel);
}

/// Span selected by a partition (context with one hole, selected hedge).
inline Span partition_span(const Sequent& s, const Hedge& context, const Hedge& selected) {
  Span h = hole_span(context);
  if (plug(context, selected) != s.antecedent) throw InterpolationError("partition does not match the antecedent");
  return Span{h.path, h.begin, h.begin + selected.size()};
}

inline InterpolationResult extract_interpolant(const Proof& p, const Hedge& context, const Hedge& selected,
                                               Calculus c) {
  return extract_interpolant(p, partition_span(p.conclusion, context, selected), c);
}

/// Every span of `h`; empty spans only when `with_empty`.
inline std::vector<Span> all_spans(const Hedge& h, bool with_empty) {
  std::vector<Span> out;
  for (const Path& path : all_paths(h)) {
    std::size_t n = hedge_at(h, path).size();
    for (std::size_t b = 0; b <= n; ++b)
      for (std::size_t e = with_empty ? b : b + 1; e <= n; ++e) out.push_back(Span{path, b, e});
  }
  return out;
}

/// Conditions (i)-(iv) for a result against the original sequent and selection.
inline InterpolationCheck verify_interpolant(const Sequent& s, const Span& sel, const InterpolationResult& r,
                                             Calculus c) {
  InterpolationCheck out;
  Hedge delta = slice(s.antecedent, sel);
  Hedge outside = splice(s.antecedent, sel, Hedge{});
  const Type& e = r.interpolant;
  out.left_ok = r.left_proof.conclusion == Sequent{delta, e} && check(r.left_proof, c);
  out.right_ok = r.right_proof.conclusion == Sequent{splice(s.antecedent, sel, Hedge{Tree::leaf(e)}), s.succedent} &&
                 check(r.right_proof, c);
  std::set<std::string> prims;
  collect_primitives(e, prims);
  out.sigma_ok = true;
  for (const std::string& pname : prims) {
    int bound = std::min(sigma(pname, delta), sigma(pname, outside) + sigma(pname, s.succedent));
    if (sigma(pname, e) > bound) out.sigma_ok = false;
  }
  std::set<int> idx;
  collect_indices(e, idx);  // index 0 stands for unindexed brackets and modalities
  out.tau_ok = true;
  for (int i : idx) {
    int bound = std::min(tau(i, delta), tau(i, outside) + tau(i, s.succedent));
    if (tau(i, e) > bound) out.tau_ok = false;
  }
  return out;
}

/// ||E|| = |[[Delta]]| for an extraction from a thin conclusion.
inline bool verify_thin_eq2(const Proof& p, const Span& sel, Calculus c) {
  if (!is_thin(p.conclusion)) throw InterpolationError("conclusion is not thin");
  auto r = extract_interpolant(p, sel, c);
  return static_cast<std::size_t>(r.interpolant.length()) == wlen(interpret(slice(p.conclusion.antecedent, sel)));
}

}  // namespace lambek

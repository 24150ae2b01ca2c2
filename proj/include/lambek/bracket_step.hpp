#pragma once

#include <utility>

#include "interpolate.hpp"

namespace lambek {

enum class BracketVariant { Dia, Box };

/// Either Delta => B and Gamma[dia B] => A, or Delta => boxd B and Gamma[B] => A.
struct BracketStep {
  Type b;
  BracketVariant variant;
  Proof inner;  // Delta => B or Delta => boxd B
  Proof outer;  // Gamma[dia B] => A or Gamma[B] => A
};

namespace detail {

class BracketStepper {
 public:
  BracketStepper(Calculus c, bool guarded) : interp_(c, guarded) {}

  // `s` is the one-tree span of the designated bracket
  BracketStep run(const Proof& p, const Span& s) {
    const Path& q = p.principal.path;
    const std::size_t t = p.principal.pos;
    switch (p.rule) {
      case Rule::Ax:
      case Rule::UnitR: throw InterpolationError("designated bracket not found");
      case Rule::DiaR: {
        int idx = p.conclusion.succedent.index();
        const Proof& prem = p.premises[0];
        if (s.path.empty()) {
          // the bracket is introduced here
          auto r = interp_.run(prem, Span{{}, 0, prem.conclusion.antecedent.size()});
          return {r.interpolant, BracketVariant::Dia, std::move(r.left_proof),
                  build::dia_l(build::dia_r(std::move(r.right_proof), idx), {}, 0)};
        }
        Span u = s;
        u.path.erase(u.path.begin());
        auto r = run(prem, u);
        r.outer = build::dia_r(std::move(r.outer), idx);
        return r;
      }
      case Rule::BoxDownL:
        if (s.path == q && s.begin == t) {
          int idx = hedge_at(p.conclusion.antecedent, q)[t].index;
          auto r = interp_.run(p.premises[0], Span{q, t, t + 1});
          return {r.interpolant, BracketVariant::Box,
                  build::box_r(build::box_l(std::move(r.left_proof), {}, 0, idx)), std::move(r.right_proof)};
        }
        return single(p, s, 1);
      case Rule::UnitL: return single(p, s, 0);
      case Rule::ProdL: return single(p, s, 2);
      case Rule::DiaL: return single(p, s, 1);
      case Rule::UnderL: return two(p, s, true);
      case Rule::OverL: return two(p, s, false);
      case Rule::ProdR: {
        std::size_t k = p.principal.split;
        Span u = s;
        bool left = u.path.empty() ? u.begin < k : u.path[0] < k;
        if (!left) (u.path.empty() ? u.begin : u.path[0]) -= k;
        if (u.path.empty()) u.end = u.begin + 1;
        auto r = run(p.premises[left ? 0 : 1], u);
        r.outer = left ? build::prod_r(std::move(r.outer), p.premises[1]) : build::prod_r(p.premises[0], std::move(r.outer));
        return r;
      }
      case Rule::UnderR: {
        Span u = s;
        if (u.path.empty()) {
          ++u.begin;
          ++u.end;
        } else {
          ++u.path[0];
        }
        auto r = run(p.premises[0], u);
        r.outer = build::under_r(std::move(r.outer));
        return r;
      }
      case Rule::OverR: {
        auto r = run(p.premises[0], s);
        r.outer = build::over_r(std::move(r.outer));
        return r;
      }
      case Rule::BoxDownR: {
        Span u = s;
        u.path.insert(u.path.begin(), 0);
        auto r = run(p.premises[0], u);
        r.outer = build::box_r(std::move(r.outer));
        return r;
      }
    }
    throw InterpolationError("unknown rule");
  }

 private:
  static Site inside(const Span& s, const Path& q, std::size_t t) {
    Site at = relative(s, q, t);
    at.path.erase(at.path.begin());  // drop the designated bracket itself
    return at;
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

  BracketStep single(const Proof& p, const Span& s, std::size_t k) {
    const Path& q = p.principal.path;
    std::size_t t = p.principal.pos;
    Rel rel = relate(s, q, t);
    Span ps = through_edit(s, q, t, k);
    auto r = run(p.premises[0], ps);
    if (rel == Rel::Containing) {
      r.inner = reapply(p, std::move(r.inner), inside(ps, q, t));
    } else {
      r.outer = reapply(p, std::move(r.outer), collapsed(ps, q, t));
    }
    return r;
  }

  BracketStep two(const Proof& p, const Span& s, bool under) {
    const Path& q = p.principal.path;
    const std::size_t j = p.principal.pos, g = p.principal.split;
    // active region [lo, hi) at level q; Gamma is [glo, ghi)
    const std::size_t lo = under ? g : j, hi = under ? j + 1 : g;
    const std::size_t glo = under ? g : j + 1, ghi = under ? j : g;
    const std::size_t site = under ? g : j;  // B in the right premise
    const std::size_t d = hi - lo - 1;
    const Proof& lp = p.premises[0];
    const Proof& rp = p.premises[1];
    auto rebuild = [&](Proof left, Proof right, const Path& path, std::size_t pos) {
      return under ? build::under_l(std::move(left), std::move(right), path, pos)
                   : build::over_l(std::move(left), std::move(right), path, pos);
    };

    // the selection is one tree, so it is inside Gamma, contains the region's
    // site, or is disjoint from the region
    std::size_t x;
    bool at_level = s.path == q, below = proper_prefix(q, s.path);
    if (at_level || below) {
      x = at_level ? s.begin : s.path[q.size()];
      if (glo <= x && x < ghi) {
        Span ls = s;
        if (at_level) {
          ls = Span{{}, x - glo, x - glo + 1};
        } else {
          ls.path.erase(ls.path.begin(), ls.path.begin() + static_cast<std::ptrdiff_t>(q.size()));
          ls.path[0] = x - glo;
        }
        auto r = run(lp, ls);
        r.outer = rebuild(std::move(r.outer), rp, q, site);
        return r;
      }
      Span rs = s;
      if (x >= hi) {
        if (at_level) {
          rs.begin -= d;
          rs.end -= d;
        } else {
          rs.path[q.size()] -= d;
        }
      }
      auto r = run(rp, rs);
      Site at = collapsed(rs, q, site);
      r.outer = rebuild(lp, std::move(r.outer), at.path, at.pos);
      return r;
    }
    if (proper_prefix(s.path, q) && q[s.path.size()] == s.begin) {
      auto r = run(rp, s);
      r.inner = rebuild(lp, std::move(r.inner), inside(s, q, site).path, site);
      return r;
    }
    auto r = run(rp, s);
    r.outer = rebuild(lp, std::move(r.outer), q, site);
    return r;
  }

  Interpolator interp_;
};

}  // namespace detail

/// One bracket-removal step for the bracket tree at `at` (a one-tree span). In
/// guarded mode the bracket must not be empty.
inline BracketStep bracket_step(const Proof& p, const Span& at, Calculus c) {
  const Tree& t = hedge_at(p.conclusion.antecedent, at.path).at(at.begin);
  if (!t.is_bracket() || at.end != at.begin + 1) throw InterpolationError("designated span is not a bracket");
  if (t.children.empty()) throw InterpolationError("designated bracket is empty");
  detail::BracketStepper st(c, guarded_mode(p.conclusion, c));
  return st.run(p, at);
}

}  // namespace lambek

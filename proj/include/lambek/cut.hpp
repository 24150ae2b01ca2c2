#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hedge.hpp"

namespace lambek {

/// A derivation from a base set using Cut only. A leaf is a base member; a
/// cut node replaces the leaf at `site` of the right premise's antecedent by
/// the left premise's antecedent.
struct CutDerivation {
  Sequent conclusion;
  bool is_leaf = true;
  std::vector<CutDerivation> premises;  // {left: Gamma => A, right: Delta[A] => B}
  Path site_path;
  std::size_t site_pos = 0;

  std::size_t cuts() const {
    std::size_t n = is_leaf ? 0 : 1;
    for (const auto& p : premises) n += p.cuts();
    return n;
  }
};

inline CutDerivation cut_leaf(Sequent s) { return CutDerivation{std::move(s), true, {}, {}, 0}; }

inline CutDerivation cut(CutDerivation left, CutDerivation right, const Path& path, std::size_t pos) {
  const Hedge& at = hedge_at(right.conclusion.antecedent, path);
  if (pos >= at.size() || !at[pos].is_leaf() || at[pos].type != left.conclusion.succedent)
    throw std::invalid_argument("cut formula does not match");
  Sequent s{splice(right.conclusion.antecedent, Span{path, pos, pos + 1}, left.conclusion.antecedent),
            right.conclusion.succedent};
  return CutDerivation{std::move(s), false, {std::move(left), std::move(right)}, path, pos};
}

/// Recomputes every conclusion from the leaves; true iff all stored
/// conclusions agree.
inline bool replay(const CutDerivation& d) {
  if (d.is_leaf) return d.premises.empty();
  if (d.premises.size() != 2 || !replay(d.premises[0]) || !replay(d.premises[1])) return false;
  try {
    CutDerivation again = cut(d.premises[0], d.premises[1], d.site_path, d.site_pos);
    return again.conclusion == d.conclusion;
  } catch (const std::exception&) {
    return false;
  }
}

inline void cut_leaves(const CutDerivation& d, std::vector<Sequent>& out) {
  if (d.is_leaf) out.push_back(d.conclusion);
  for (const auto& p : d.premises) cut_leaves(p, out);
}

inline void for_each_conclusion(const CutDerivation& d, const std::function<void(const Sequent&)>& f) {
  f(d.conclusion);
  for (const auto& p : d.premises) for_each_conclusion(p, f);
}

inline void print_cut_derivation(const CutDerivation& d, std::ostream& out, int depth = 0) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << (d.is_leaf ? "Base" : "Cut") << "  "
      << str(d.conclusion) << '\n';
  for (const auto& p : d.premises) print_cut_derivation(p, out, depth + 1);
}

inline std::string cut_derivation_text(const CutDerivation& d) {
  std::ostringstream ss;
  print_cut_derivation(d, ss);
  return ss.str();
}

namespace detail {

/// Span DP: D[loc] is the set of types E with base |-Cut slice(loc) => E.
class CutSolver {
 public:
  CutSolver(const std::vector<Sequent>& base, const Sequent& goal) : base_(base), goal_(goal) {
    for (std::size_t i = 0; i < base_.size(); ++i) by_size_[base_[i].antecedent.size()].push_back(i);
  }

  std::optional<CutDerivation> solve() {
    std::vector<Loc> locs;
    collect(goal_.antecedent, {}, locs);
    std::stable_sort(locs.begin(), locs.end(), [](const Loc& a, const Loc& b) { return a.weight < b.weight; });
    for (const Loc& l : locs) fill(l);
    Key top{{}, 0, goal_.antecedent.size()};
    auto it = table_.find(top);
    if (it == table_.end() || !it->second.count(goal_.succedent.str())) return std::nullopt;
    return derive(top, goal_.succedent.str());
  }

 private:
  struct Key {
    Path path;
    std::size_t b, e;
    friend bool operator<(const Key& x, const Key& y) {
      if (x.path != y.path) return x.path < y.path;
      if (x.b != y.b) return x.b < y.b;
      return x.e < y.e;
    }
  };
  struct Loc {
    Key key;
    int weight;
  };
  // how a base antecedent tree matched: a literal leaf, a sub-span, or a bracket
  struct Piece {
    enum Kind { Literal, Sub, Bracket } kind;
    Key key;
    std::string type;
    std::vector<Piece> inner;
  };
  struct Entry {
    std::size_t base;
    std::vector<Piece> pieces;
  };

  static int tree_weight(const Tree& t) {
    if (t.is_leaf()) return 1;
    int w = 1;
    for (const Tree& c : t.children) w += tree_weight(c);
    return w;
  }

  void collect(const Hedge& h, const Path& path, std::vector<Loc>& out) {
    std::vector<int> prefix{0};
    for (const Tree& t : h) prefix.push_back(prefix.back() + tree_weight(t));
    for (std::size_t b = 0; b <= h.size(); ++b)
      for (std::size_t e = b; e <= h.size(); ++e) out.push_back(Loc{Key{path, b, e}, prefix[e] - prefix[b]});
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i].is_bracket()) {
        Path sub = path;
        sub.push_back(i);
        collect(h[i].children, sub, out);
      }
  }

  const std::map<std::string, Entry>* types_at(const Key& k) const {
    auto it = table_.find(k);
    return it == table_.end() ? nullptr : &it->second;
  }

  // all ways to match pattern trees pat[i..] against trees [x, e) at `path`
  bool match(const Hedge& pat, std::size_t i, const Path& path, std::size_t x, std::size_t e,
             std::vector<Piece>& acc) const {
    const Hedge& at = hedge_at(goal_.antecedent, path);
    if (i == pat.size()) return x == e;
    const Tree& p = pat[i];
    if (p.is_bracket()) {
      if (x >= e || !at[x].is_bracket() || at[x].index != p.index) return false;
      Path sub = path;
      sub.push_back(x);
      std::vector<Piece> inner;
      if (!match(p.children, 0, sub, 0, at[x].children.size(), inner)) return false;
      acc.push_back(Piece{Piece::Bracket, Key{sub, 0, at[x].children.size()}, {}, std::move(inner)});
      if (match(pat, i + 1, path, x + 1, e, acc)) return true;
      acc.pop_back();
      return false;
    }
    const std::string& want = p.type.str();
    for (std::size_t y = x; y <= e; ++y) {
      if (y == x + 1 && at[x].is_leaf() && at[x].type == p.type) {
        acc.push_back(Piece{Piece::Literal, Key{path, x, y}, want, {}});
        if (match(pat, i + 1, path, y, e, acc)) return true;
        acc.pop_back();
      }
      const auto* d = types_at(Key{path, x, y});
      if (d && d->count(want)) {
        acc.push_back(Piece{Piece::Sub, Key{path, x, y}, want, {}});
        if (match(pat, i + 1, path, y, e, acc)) return true;
        acc.pop_back();
      }
    }
    return false;
  }

  void fill(const Loc& l) {
    auto& cell = table_[l.key];
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t bi = 0; bi < base_.size(); ++bi) {
        const Sequent& s = base_[bi];
        const std::string key = s.succedent.str();
        if (cell.count(key)) continue;
        std::vector<Piece> pieces;
        if (!match(s.antecedent, 0, l.key.path, l.key.b, l.key.e, pieces)) continue;
        // a base sequent matched only by itself through a sub-span equal to
        // this whole span would be circular
        if (pieces.size() == 1 && pieces[0].kind == Piece::Sub && pieces[0].key.b == l.key.b &&
            pieces[0].key.e == l.key.e && pieces[0].type == key)
          continue;
        cell.emplace(key, Entry{bi, std::move(pieces)});
        changed = true;
      }
    }
  }

  // leaves of the base antecedent in pre-order, paired with their pieces
  void flatten(const std::vector<Piece>& pieces, const Path& at, std::vector<std::pair<Path, std::size_t>>& sites,
               std::vector<const Piece*>& which) const {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].kind == Piece::Bracket) {
        Path sub = at;
        sub.push_back(i);
        flatten(pieces[i].inner, sub, sites, which);
      } else {
        sites.emplace_back(at, i);
        which.push_back(&pieces[i]);
      }
    }
  }

  CutDerivation derive(const Key& k, const std::string& type) const {
    const Entry& en = table_.at(k).at(type);
    CutDerivation d = cut_leaf(base_[en.base]);
    std::vector<std::pair<Path, std::size_t>> sites;
    std::vector<const Piece*> which;
    flatten(en.pieces, {}, sites, which);
    // right to left so earlier sites keep their addresses
    for (std::size_t i = sites.size(); i-- > 0;) {
      if (which[i]->kind != Piece::Sub) continue;
      CutDerivation left = derive(which[i]->key, which[i]->type);
      d = cut(std::move(left), std::move(d), sites[i].first, sites[i].second);
    }
    return d;
  }

  const std::vector<Sequent>& base_;
  const Sequent& goal_;
  std::map<std::size_t, std::vector<std::size_t>> by_size_;
  std::map<Key, std::map<std::string, Entry>> table_;
};

}  // namespace detail

/// A derivation of `s` from `base` by Cut alone, if one exists.
inline std::optional<CutDerivation> cut_derives(const std::vector<Sequent>& base, const Sequent& s) {
  detail::CutSolver solver(base, s);
  return solver.solve();
}

}  // namespace lambek

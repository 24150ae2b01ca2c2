#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hedge.hpp"
#include "type.hpp"

namespace lambek {

struct Generator {
  enum class Kind : unsigned char { Prim, Open, Close };
  Kind kind = Kind::Prim;
  int index = 0;
  std::string name;

  static Generator prim(std::string n) { return Generator{Kind::Prim, 0, std::move(n)}; }
  static Generator open(int i) { return Generator{Kind::Open, i, {}}; }
  static Generator close(int i) { return Generator{Kind::Close, i, {}}; }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.kind == b.kind && a.index == b.index && a.name == b.name;
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
};

struct Letter {
  Generator gen;
  int sign = 1;
  friend bool operator==(const Letter& a, const Letter& b) { return a.sign == b.sign && a.gen == b.gen; }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

/// Reduced word of the free group; the empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<Letter>& letters) {
    for (const Letter& l : letters) push(l);
  }
  static GroupWord of(Generator g, int sign = 1) { return GroupWord({Letter{std::move(g), sign}}); }

  const std::vector<Letter>& letters() const { return w_; }
  std::size_t size() const { return w_.size(); }
  bool is_identity() const { return w_.empty(); }

  /// Appends one letter, cancelling at the seam.
  void push(const Letter& l) {
    if (!w_.empty() && w_.back().gen == l.gen && w_.back().sign == -l.sign) w_.pop_back();
    else w_.push_back(l);
  }

  GroupWord& operator*=(const GroupWord& o) {
    for (const Letter& l : o.w_) push(l);
    return *this;
  }

  friend bool operator==(const GroupWord& a, const GroupWord& b) { return a.w_ == b.w_; }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }

 private:
  std::vector<Letter> w_;
};

inline GroupWord mul(GroupWord u, const GroupWord& v) {
  u *= v;
  return u;
}

inline GroupWord inv(const GroupWord& u) {
  std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
  for (Letter& l : out) l.sign = -l.sign;
  return GroupWord(out);
}

inline std::size_t wlen(const GroupWord& u) { return u.size(); }

inline std::string str(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Prim: return g.name;
    case Generator::Kind::Open: return "<" + std::to_string(g.index);
    case Generator::Kind::Close: return ">" + std::to_string(g.index);
  }
  return {};
}

inline std::string str(const GroupWord& u) {
  if (u.is_identity()) return "e";
  std::string out;
  for (const Letter& l : u.letters()) {
    if (!out.empty()) out += ' ';
    out += str(l.gen);
    if (l.sign < 0) out += '\'';
  }
  return out;
}

namespace detail {

inline void interpret_into(const Type& t, GroupWord& out, int sign, bool strict) {
  // sign = -1 appends the inverse of the interpretation
  auto bracket = [&](Generator::Kind k, int s) {
    if (strict && t.index() == 0) throw std::invalid_argument("interpretation needs indexed modalities");
    out.push(Letter{Generator{k, t.index(), {}}, s});
  };
  switch (t.kind()) {
    case Kind::Prim: out.push(Letter{Generator::prim(t.name()), sign}); return;
    case Kind::Unit: return;
    case Kind::Under:
      if (sign > 0) {
        interpret_into(t.left(), out, -1, strict);
        interpret_into(t.right(), out, 1, strict);
      } else {
        interpret_into(t.right(), out, -1, strict);
        interpret_into(t.left(), out, 1, strict);
      }
      return;
    case Kind::Over:
      if (sign > 0) {
        interpret_into(t.left(), out, 1, strict);
        interpret_into(t.right(), out, -1, strict);
      } else {
        interpret_into(t.right(), out, 1, strict);
        interpret_into(t.left(), out, -1, strict);
      }
      return;
    case Kind::Prod:
      if (sign > 0) {
        interpret_into(t.left(), out, 1, strict);
        interpret_into(t.right(), out, 1, strict);
      } else {
        interpret_into(t.right(), out, -1, strict);
        interpret_into(t.left(), out, -1, strict);
      }
      return;
    case Kind::Dia:
    case Kind::BoxDown: {
      int s = t.is(Kind::Dia) ? 1 : -1;
      // <i A >i (dia) or <i' A >i' (box); the inverse reverses and flips
      if (sign > 0) {
        bracket(Generator::Kind::Open, s);
        interpret_into(t.body(), out, 1, strict);
        bracket(Generator::Kind::Close, s);
      } else {
        bracket(Generator::Kind::Close, -s);
        interpret_into(t.body(), out, -1, strict);
        bracket(Generator::Kind::Open, -s);
      }
      return;
    }
  }
}

inline void interpret_into(const Hedge& h, GroupWord& out, bool strict) {
  for (const Tree& t : h) {
    if (t.is_leaf()) {
      interpret_into(t.type, out, 1, strict);
    } else if (t.is_bracket()) {
      if (strict && t.index == 0) throw std::invalid_argument("interpretation needs indexed brackets");
      out.push(Letter{Generator::open(t.index), 1});
      interpret_into(t.children, out, strict);
      out.push(Letter{Generator::close(t.index), 1});
    } else {
      throw std::invalid_argument("cannot interpret a hole");
    }
  }
}

}  // namespace detail

/// Free-group image of an indexed type; unindexed modalities are rejected.
inline GroupWord interpret(const Type& t) {
  GroupWord w;
  detail::interpret_into(t, w, 1, true);
  return w;
}

inline GroupWord interpret(const Hedge& h) {
  GroupWord w;
  detail::interpret_into(h, w, true);
  return w;
}

/// Same clauses, but index 0 is an ordinary bracket generator. Erasing
/// indices is a group homomorphism, so equality here is still necessary for
/// provability of unindexed sequents.
inline GroupWord interpret_plain(const Type& t) {
  GroupWord w;
  detail::interpret_into(t, w, 1, false);
  return w;
}

inline GroupWord interpret_plain(const Hedge& h) {
  GroupWord w;
  detail::interpret_into(h, w, false);
  return w;
}

/// Least 1-based k < n with |u_k u_{k+1}| <= max(|u_k|, |u_{k+1}|).
inline std::size_t pentus_split(const std::vector<GroupWord>& words) {
  if (words.size() < 2) throw std::invalid_argument("pentus_split needs at least two words");
  GroupWord prod;
  for (const GroupWord& w : words) prod *= w;
  if (!prod.is_identity()) throw std::invalid_argument("product is not the identity");
  for (std::size_t k = 0; k + 1 < words.size(); ++k)
    if (wlen(mul(words[k], words[k + 1])) <= std::max(wlen(words[k]), wlen(words[k + 1]))) return k + 1;
  throw std::logic_error("no split found");
}

}  // namespace lambek

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "type.hpp"

namespace lambek {

struct Tree;
using Hedge = std::vector<Tree>;

/// A leaf, a bracket pair around a hedge, or the hole of a context.
struct Tree {
  enum class Tag { Leaf, Bracket, Hole };
  Tag tag = Tag::Leaf;
  Type type;
  int index = 0;
  Hedge children;

  static Tree leaf(Type t) { return Tree{Tag::Leaf, std::move(t), 0, {}}; }
  static Tree bracket(Hedge h, int index = 0) { return Tree{Tag::Bracket, {}, index, std::move(h)}; }
  static Tree hole() { return Tree{Tag::Hole, {}, 0, {}}; }

  bool is_leaf() const { return tag == Tag::Leaf; }
  bool is_bracket() const { return tag == Tag::Bracket; }
  bool is_hole() const { return tag == Tag::Hole; }
};

inline bool operator==(const Tree& a, const Tree& b) {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case Tree::Tag::Leaf: return a.type == b.type;
    case Tree::Tag::Bracket: return a.index == b.index && a.children == b.children;
    case Tree::Tag::Hole: return true;
  }
  return false;
}
inline bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

/// Sequence of indices into brackets, from the root hedge downwards.
using Path = std::vector<std::size_t>;

/// Contiguous run of trees [begin, end) inside the hedge addressed by `path`.
struct Span {
  Path path;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool empty() const { return begin == end; }
  friend bool operator==(const Span& a, const Span& b) {
    return a.path == b.path && a.begin == b.begin && a.end == b.end;
  }
};

struct Sequent {
  Hedge antecedent;
  Type succedent;
  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.succedent == b.succedent && a.antecedent == b.antecedent;
  }
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
};

// ---- printing ----

inline std::string str(const Hedge& h);

inline std::string str(const Tree& t) {
  switch (t.tag) {
    case Tree::Tag::Leaf: return t.type.str();
    case Tree::Tag::Hole: return "_";
    case Tree::Tag::Bracket: {
      std::string open = t.index ? "[:" + std::to_string(t.index) : "[";
      std::string close = t.index ? "]:" + std::to_string(t.index) : "]";
      if (t.children.empty()) return open + " " + close;
      return open + " " + str(t.children) + " " + close;
    }
  }
  return {};
}

inline std::string str(const Hedge& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ' ';
    out += str(h[i]);
  }
  return out;
}

inline std::string str(const Sequent& s) {
  std::string a = str(s.antecedent);
  return a.empty() ? "=> " + s.succedent.str() : a + " => " + s.succedent.str();
}

// ---- addressing ----

inline const Hedge& hedge_at(const Hedge& h, const Path& p) {
  const Hedge* cur = &h;
  for (std::size_t i : p) {
    if (i >= cur->size() || !(*cur)[i].is_bracket()) throw std::out_of_range("bad hedge path");
    cur = &(*cur)[i].children;
  }
  return *cur;
}

inline Hedge& hedge_at(Hedge& h, const Path& p) {
  Hedge* cur = &h;
  for (std::size_t i : p) {
    if (i >= cur->size() || !(*cur)[i].is_bracket()) throw std::out_of_range("bad hedge path");
    cur = &(*cur)[i].children;
  }
  return *cur;
}

inline Hedge slice(const Hedge& h, const Span& s) {
  const Hedge& at = hedge_at(h, s.path);
  if (s.begin > s.end || s.end > at.size()) throw std::out_of_range("bad span");
  return Hedge(at.begin() + static_cast<std::ptrdiff_t>(s.begin),
               at.begin() + static_cast<std::ptrdiff_t>(s.end));
}

/// Replaces the trees of span `s` by `with`.
inline Hedge splice(Hedge h, const Span& s, const Hedge& with) {
  Hedge& at = hedge_at(h, s.path);
  if (s.begin > s.end || s.end > at.size()) throw std::out_of_range("bad span");
  at.erase(at.begin() + static_cast<std::ptrdiff_t>(s.begin),
           at.begin() + static_cast<std::ptrdiff_t>(s.end));
  at.insert(at.begin() + static_cast<std::ptrdiff_t>(s.begin), with.begin(), with.end());
  return h;
}

inline Hedge make_context(const Hedge& h, const Span& s) { return splice(h, s, Hedge{Tree::hole()}); }

inline bool find_hole(const Hedge& h, Path& path, std::size_t& pos, int& count) {
  bool found = false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_hole()) {
      ++count;
      if (!found) {
        pos = i;
        found = true;
      }
    } else if (h[i].is_bracket()) {
      Path sub = path;
      sub.push_back(i);
      std::size_t p2 = 0;
      if (find_hole(h[i].children, sub, p2, count) && !found) {
        path = sub;
        pos = p2;
        found = true;
      }
    }
  }
  return found;
}

/// Location of the unique hole of a context, as a one-tree span.
inline Span hole_span(const Hedge& ctx) {
  Path path;
  std::size_t pos = 0;
  int count = 0;
  find_hole(ctx, path, pos, count);
  if (count != 1) throw std::invalid_argument("context must contain exactly one hole");
  return Span{path, pos, pos + 1};
}

inline Hedge plug(const Hedge& ctx, const Hedge& d) { return splice(ctx, hole_span(ctx), d); }

inline void yield_into(const Hedge& h, std::vector<Type>& out) {
  for (const Tree& t : h) {
    if (t.is_leaf()) out.push_back(t.type);
    else if (t.is_bracket()) yield_into(t.children, out);
  }
}

inline std::vector<Type> yield_of(const Hedge& h) {
  std::vector<Type> out;
  yield_into(h, out);
  return out;
}

// ---- measures ----

inline int sigma(const std::string& name, const Hedge& h) {
  int n = 0;
  for (const Tree& t : h) {
    if (t.is_leaf()) n += sigma(name, t.type);
    else if (t.is_bracket()) n += sigma(name, t.children);
  }
  return n;
}

/// Bracket pairs count once.
inline int tau(int index, const Hedge& h) {
  int n = 0;
  for (const Tree& t : h) {
    if (t.is_leaf()) n += tau(index, t.type);
    else if (t.is_bracket()) n += (t.index == index ? 1 : 0) + tau(index, t.children);
  }
  return n;
}

inline int sigma(const std::string& name, const Sequent& s) {
  return sigma(name, s.antecedent) + sigma(name, s.succedent);
}
inline int tau(int index, const Sequent& s) { return tau(index, s.antecedent) + tau(index, s.succedent); }

inline void collect_primitives(const Hedge& h, std::set<std::string>& out) {
  for (const Tree& t : h) {
    if (t.is_leaf()) collect_primitives(t.type, out);
    else if (t.is_bracket()) collect_primitives(t.children, out);
  }
}
inline void collect_primitives(const Sequent& s, std::set<std::string>& out) {
  collect_primitives(s.antecedent, out);
  collect_primitives(s.succedent, out);
}

inline void collect_indices(const Hedge& h, std::set<int>& out) {
  for (const Tree& t : h) {
    if (t.is_leaf()) collect_indices(t.type, out);
    else if (t.is_bracket()) {
      out.insert(t.index);
      collect_indices(t.children, out);
    }
  }
}
inline void collect_indices(const Sequent& s, std::set<int>& out) {
  collect_indices(s.antecedent, out);
  collect_indices(s.succedent, out);
}

inline bool is_thin(const Sequent& s) {
  std::set<std::string> prims;
  std::set<int> idx;
  collect_primitives(s, prims);
  collect_indices(s, idx);
  for (const auto& p : prims)
    if (sigma(p, s) > 2) return false;
  for (int i : idx)
    if (tau(i, s) > 2) return false;
  return true;
}

inline int bracket_count(const Hedge& h) {
  int n = 0;
  for (const Tree& t : h)
    if (t.is_bracket()) n += 1 + bracket_count(t.children);
  return n;
}

inline int leaf_count(const Hedge& h) {
  int n = 0;
  for (const Tree& t : h) n += t.is_leaf() ? 1 : t.is_bracket() ? leaf_count(t.children) : 0;
  return n;
}

/// Connective and unit occurrences over the whole sequent.
inline int weight(const Hedge& h) {
  int n = 0;
  for (const Tree& t : h) n += t.is_leaf() ? t.type.weight() : t.is_bracket() ? weight(t.children) : 0;
  return n;
}
inline int weight(const Sequent& s) { return weight(s.antecedent) + s.succedent.weight(); }

inline int modality_count(const Hedge& h) {
  int n = 0;
  for (const Tree& t : h) n += t.is_leaf() ? modality_count(t.type) : t.is_bracket() ? modality_count(t.children) : 0;
  return n;
}
inline int modality_count(const Sequent& s) {
  return modality_count(s.antecedent) + modality_count(s.succedent);
}

inline bool has_empty_bracket(const Hedge& h) {
  for (const Tree& t : h)
    if (t.is_bracket() && (t.children.empty() || has_empty_bracket(t.children))) return true;
  return false;
}

inline Hedge deindex(const Hedge& h, const std::map<std::string, std::string>& theta) {
  Hedge out;
  out.reserve(h.size());
  for (const Tree& t : h) {
    if (t.is_leaf()) out.push_back(Tree::leaf(deindex(t.type, theta)));
    else if (t.is_bracket()) out.push_back(Tree::bracket(deindex(t.children, theta)));
    else out.push_back(t);
  }
  return out;
}

inline Sequent deindex(const Sequent& s, const std::map<std::string, std::string>& theta) {
  return Sequent{deindex(s.antecedent, theta), deindex(s.succedent, theta)};
}

/// Every sub-hedge address, outermost first, left to right within a depth.
inline std::vector<Path> all_paths(const Hedge& h) {
  std::vector<Path> out{Path{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    const Hedge& at = hedge_at(h, out[k]);
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (!at[i].is_bracket()) continue;
      Path p = out[k];
      p.push_back(i);
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline Hedge flat_hedge(const std::vector<Type>& ts) {
  Hedge h;
  h.reserve(ts.size());
  for (const Type& t : ts) h.push_back(Tree::leaf(t));
  return h;
}

}  // namespace lambek

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace lambek {

enum class Kind : std::uint8_t { Prim, Unit, Under, Over, Prod, Dia, BoxDown };

/// Immutable type formula. Copies share structure.
///
/// Under(a, b) is a\b (argument a, result b); Over(b, a) is b/a (result b,
/// argument a). Dia and BoxDown carry an index, 0 meaning "not indexed".
class Type {
 public:
  Type() = default;

  static Type prim(std::string name);
  static Type unit();
  static Type under(Type arg, Type res);
  static Type over(Type res, Type arg);
  static Type prod(Type lhs, Type rhs);
  static Type dia(Type body, int index = 0);
  static Type boxdown(Type body, int index = 0);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  const std::string& name() const;
  int index() const;
  const Type& left() const;
  const Type& right() const;
  const Type& body() const { return left(); }

  bool is(Kind k) const { return valid() && kind() == k; }
  bool is_binary() const {
    return is(Kind::Under) || is(Kind::Over) || is(Kind::Prod);
  }
  bool is_modal() const { return is(Kind::Dia) || is(Kind::BoxDown); }

  std::size_t hash() const;
  /// Canonical text (minimal parentheses, single spaces).
  const std::string& str() const;
  /// ||A||: primitives 1, unit 0, binaries add, modalities add 2.
  int length() const;
  /// Number of connective and unit occurrences.
  int weight() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b) { return a.str() < b.str(); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Type make(Kind k, std::string name, int index, Type l, Type r);

  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind;
  int index;
  std::string name;
  Type l, r;
  std::size_t hash;
  std::string text;
  int length;
  int weight;
};

namespace detail {

inline std::string operand_text(const Type& t) {
  return t.is_binary() ? "(" + t.str() + ")" : t.str();
}

inline std::string modal_prefix(const char* word, int index) {
  std::string s = word;
  if (index > 0) s += ":" + std::to_string(index);
  return s;
}

}  // namespace detail

inline Type Type::make(Kind k, std::string name, int index, Type l, Type r) {
  if (index < 0) throw std::invalid_argument("negative modality index");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  n->name = std::move(name);
  n->l = std::move(l);
  n->r = std::move(r);
  std::size_t h = std::hash<int>{}(static_cast<int>(k) * 131 + index);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  switch (k) {
    case Kind::Prim:
      mix(std::hash<std::string>{}(n->name));
      n->text = n->name;
      n->length = 1;
      n->weight = 0;
      break;
    case Kind::Unit:
      n->text = "1";
      n->length = 0;
      n->weight = 1;
      break;
    case Kind::Under:
    case Kind::Over:
    case Kind::Prod: {
      mix(n->l.hash());
      mix(n->r.hash());
      const char* op = k == Kind::Under ? " \\ " : k == Kind::Over ? " / " : " * ";
      n->text = detail::operand_text(n->l) + op + detail::operand_text(n->r);
      n->length = n->l.length() + n->r.length();
      n->weight = n->l.weight() + n->r.weight() + 1;
      break;
    }
    case Kind::Dia:
    case Kind::BoxDown:
      mix(n->l.hash());
      n->text = detail::modal_prefix(k == Kind::Dia ? "dia" : "boxd", index) + " " +
                detail::operand_text(n->l);
      n->length = n->l.length() + 2;
      n->weight = n->l.weight() + 1;
      break;
  }
  n->hash = h;
  return Type(std::move(n));
}

inline Type Type::prim(std::string name) { return make(Kind::Prim, std::move(name), 0, {}, {}); }
inline Type Type::unit() { return make(Kind::Unit, {}, 0, {}, {}); }
inline Type Type::under(Type arg, Type res) {
  return make(Kind::Under, {}, 0, std::move(arg), std::move(res));
}
inline Type Type::over(Type res, Type arg) {
  return make(Kind::Over, {}, 0, std::move(res), std::move(arg));
}
inline Type Type::prod(Type lhs, Type rhs) {
  return make(Kind::Prod, {}, 0, std::move(lhs), std::move(rhs));
}
inline Type Type::dia(Type body, int index) { return make(Kind::Dia, {}, index, std::move(body), {}); }
inline Type Type::boxdown(Type body, int index) {
  return make(Kind::BoxDown, {}, index, std::move(body), {});
}

inline Kind Type::kind() const { return node_->kind; }
inline const std::string& Type::name() const { return node_->name; }
inline int Type::index() const { return node_->index; }
inline const Type& Type::left() const { return node_->l; }
inline const Type& Type::right() const { return node_->r; }
inline std::size_t Type::hash() const { return node_ ? node_->hash : 0; }
inline const std::string& Type::str() const {
  static const std::string empty;
  return node_ ? node_->text : empty;
}
inline int Type::length() const { return node_->length; }
inline int Type::weight() const { return node_->weight; }

inline bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->hash == b.node_->hash && a.node_->text == b.node_->text;
}

inline int length(const Type& t) { return t.length(); }

/// Occurrences of primitive `name` in `t`.
inline int sigma(const std::string& name, const Type& t) {
  switch (t.kind()) {
    case Kind::Prim: return t.name() == name ? 1 : 0;
    case Kind::Unit: return 0;
    case Kind::Dia:
    case Kind::BoxDown: return sigma(name, t.body());
    default: return sigma(name, t.left()) + sigma(name, t.right());
  }
}

/// Occurrences of modalities carrying `index` in `t`.
inline int tau(int index, const Type& t) {
  switch (t.kind()) {
    case Kind::Prim:
    case Kind::Unit: return 0;
    case Kind::Dia:
    case Kind::BoxDown: return (t.index() == index ? 1 : 0) + tau(index, t.body());
    default: return tau(index, t.left()) + tau(index, t.right());
  }
}

inline void collect_primitives(const Type& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Kind::Prim: out.insert(t.name()); break;
    case Kind::Unit: break;
    case Kind::Dia:
    case Kind::BoxDown: collect_primitives(t.body(), out); break;
    default:
      collect_primitives(t.left(), out);
      collect_primitives(t.right(), out);
  }
}

/// Indices of modal occurrences (0 included when unindexed modalities occur).
inline void collect_indices(const Type& t, std::set<int>& out) {
  switch (t.kind()) {
    case Kind::Prim:
    case Kind::Unit: break;
    case Kind::Dia:
    case Kind::BoxDown:
      out.insert(t.index());
      collect_indices(t.body(), out);
      break;
    default:
      collect_indices(t.left(), out);
      collect_indices(t.right(), out);
  }
}

inline bool contains_unit(const Type& t) {
  switch (t.kind()) {
    case Kind::Prim: return false;
    case Kind::Unit: return true;
    case Kind::Dia:
    case Kind::BoxDown: return contains_unit(t.body());
    default: return contains_unit(t.left()) || contains_unit(t.right());
  }
}

inline bool contains_modality(const Type& t) {
  switch (t.kind()) {
    case Kind::Prim:
    case Kind::Unit: return false;
    case Kind::Dia:
    case Kind::BoxDown: return true;
    default: return contains_modality(t.left()) || contains_modality(t.right());
  }
}

inline int modality_count(const Type& t) {
  switch (t.kind()) {
    case Kind::Prim:
    case Kind::Unit: return 0;
    case Kind::Dia:
    case Kind::BoxDown: return 1 + modality_count(t.body());
    default: return modality_count(t.left()) + modality_count(t.right());
  }
}

/// True iff every unit occurrence is the immediate body of a diamond.
inline bool is_guarded(const Type& t) {
  switch (t.kind()) {
    case Kind::Prim: return true;
    case Kind::Unit: return false;
    case Kind::Dia: return t.body().is(Kind::Unit) || is_guarded(t.body());
    case Kind::BoxDown: return is_guarded(t.body());
    default: return is_guarded(t.left()) && is_guarded(t.right());
  }
}

/// Renames primitives through `theta` (missing entries are kept) and strips
/// every modality index.
inline Type deindex(const Type& t, const std::map<std::string, std::string>& theta) {
  switch (t.kind()) {
    case Kind::Prim: {
      auto it = theta.find(t.name());
      return it == theta.end() ? t : Type::prim(it->second);
    }
    case Kind::Unit: return t;
    case Kind::Under: return Type::under(deindex(t.left(), theta), deindex(t.right(), theta));
    case Kind::Over: return Type::over(deindex(t.left(), theta), deindex(t.right(), theta));
    case Kind::Prod: return Type::prod(deindex(t.left(), theta), deindex(t.right(), theta));
    case Kind::Dia: return Type::dia(deindex(t.body(), theta));
    case Kind::BoxDown: return Type::boxdown(deindex(t.body(), theta));
  }
  return t;
}

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};

}  // namespace lambek

#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hedge.hpp"
#include "parse.hpp"

namespace lambek {

enum class Rule { Ax, UnderL, UnderR, OverL, OverR, ProdL, ProdR, DiaL, DiaR, BoxDownL, BoxDownR, UnitL, UnitR };

inline const char* name(Rule r) {
  switch (r) {
    case Rule::Ax: return "Ax";
    case Rule::UnderL: return "UnderL";
    case Rule::UnderR: return "UnderR";
    case Rule::OverL: return "OverL";
    case Rule::OverR: return "OverR";
    case Rule::ProdL: return "ProdL";
    case Rule::ProdR: return "ProdR";
    case Rule::DiaL: return "DiaL";
    case Rule::DiaR: return "DiaR";
    case Rule::BoxDownL: return "BoxDownL";
    case Rule::BoxDownR: return "BoxDownR";
    case Rule::UnitL: return "UnitL";
    case Rule::UnitR: return "UnitR";
  }
  return "?";
}

inline std::optional<Rule> rule_from_name(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Rule::UnitR); ++i)
    if (s == name(static_cast<Rule>(i))) return static_cast<Rule>(i);
  return std::nullopt;
}

/// Where a rule instance acts in its conclusion.
///
/// ProdL, DiaL, UnitL: `pos` is the principal leaf. BoxDownL: `pos` is the
/// bracket. UnderL: `pos` is A\B and `split` the first tree of the left
/// premise's antecedent. OverL: `pos` is B/A and `split` one past the last
/// tree of the left premise's antecedent. ProdR: `split` is the size of the
/// left premise's antecedent.
struct Principal {
  Path path;
  std::size_t pos = 0;
  std::size_t split = 0;
  friend bool operator==(const Principal& a, const Principal& b) {
    return a.path == b.path && a.pos == b.pos && a.split == b.split;
  }
};

struct Proof {
  Sequent conclusion;
  Rule rule = Rule::Ax;
  Principal principal;
  std::vector<Proof> premises;

  std::size_t size() const {
    std::size_t n = 1;
    for (const Proof& p : premises) n += p.size();
    return n;
  }
};

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace build {

inline Proof axiom(const Type& p) {
  if (!p.is(Kind::Prim)) throw RuleError("axioms are primitive");
  return Proof{Sequent{Hedge{Tree::leaf(p)}, p}, Rule::Ax, {}, {}};
}

inline Proof unit_r() { return Proof{Sequent{{}, Type::unit()}, Rule::UnitR, {}, {}}; }

inline const Tree& tree_at(const Hedge& h, const Path& path, std::size_t pos) {
  const Hedge& at = hedge_at(h, path);
  if (pos >= at.size()) throw RuleError("position out of range");
  return at[pos];
}

inline const Type& leaf_at(const Hedge& h, const Path& path, std::size_t pos) {
  const Tree& t = tree_at(h, path, pos);
  if (!t.is_leaf()) throw RuleError("expected a leaf");
  return t.type;
}

/// Inserts a unit leaf at (path, pos).
inline Proof unit_l(Proof prem, const Path& path, std::size_t pos) {
  const Hedge& at = hedge_at(prem.conclusion.antecedent, path);
  if (pos > at.size()) throw RuleError("position out of range");
  Sequent s{splice(prem.conclusion.antecedent, Span{path, pos, pos}, Hedge{Tree::leaf(Type::unit())}),
            prem.conclusion.succedent};
  return Proof{std::move(s), Rule::UnitL, Principal{path, pos, 0}, {std::move(prem)}};
}

/// Merges the leaves at pos and pos+1 into a product.
inline Proof prod_l(Proof prem, const Path& path, std::size_t pos) {
  const Type& a = leaf_at(prem.conclusion.antecedent, path, pos);
  const Type& b = leaf_at(prem.conclusion.antecedent, path, pos + 1);
  Sequent s{splice(prem.conclusion.antecedent, Span{path, pos, pos + 2}, Hedge{Tree::leaf(Type::prod(a, b))}),
            prem.conclusion.succedent};
  return Proof{std::move(s), Rule::ProdL, Principal{path, pos, 0}, {std::move(prem)}};
}

inline Proof prod_r(Proof left, Proof right) {
  Hedge h = left.conclusion.antecedent;
  std::size_t k = h.size();
  h.insert(h.end(), right.conclusion.antecedent.begin(), right.conclusion.antecedent.end());
  Sequent s{std::move(h), Type::prod(left.conclusion.succedent, right.conclusion.succedent)};
  return Proof{std::move(s), Rule::ProdR, Principal{{}, 0, k}, {std::move(left), std::move(right)}};
}

/// right proves Delta[B] => C with B at (path, b_pos); result Delta[Gamma A\B] => C.
inline Proof under_l(Proof left, Proof right, const Path& path, std::size_t b_pos) {
  const Type& b = leaf_at(right.conclusion.antecedent, path, b_pos);
  Hedge repl = left.conclusion.antecedent;
  std::size_t g = b_pos, j = b_pos + repl.size();
  repl.push_back(Tree::leaf(Type::under(left.conclusion.succedent, b)));
  Sequent s{splice(right.conclusion.antecedent, Span{path, b_pos, b_pos + 1}, repl), right.conclusion.succedent};
  return Proof{std::move(s), Rule::UnderL, Principal{path, j, g}, {std::move(left), std::move(right)}};
}

/// right proves Delta[B] => C with B at (path, b_pos); result Delta[B/A Gamma] => C.
inline Proof over_l(Proof left, Proof right, const Path& path, std::size_t b_pos) {
  const Type& b = leaf_at(right.conclusion.antecedent, path, b_pos);
  Hedge repl{Tree::leaf(Type::over(b, left.conclusion.succedent))};
  repl.insert(repl.end(), left.conclusion.antecedent.begin(), left.conclusion.antecedent.end());
  std::size_t end = b_pos + repl.size();
  Sequent s{splice(right.conclusion.antecedent, Span{path, b_pos, b_pos + 1}, repl), right.conclusion.succedent};
  return Proof{std::move(s), Rule::OverL, Principal{path, b_pos, end}, {std::move(left), std::move(right)}};
}

inline Proof under_r(Proof prem) {
  const Hedge& h = prem.conclusion.antecedent;
  if (h.empty() || !h.front().is_leaf()) throw RuleError("UnderR needs a leading leaf");
  Sequent s{Hedge(h.begin() + 1, h.end()), Type::under(h.front().type, prem.conclusion.succedent)};
  return Proof{std::move(s), Rule::UnderR, {}, {std::move(prem)}};
}

inline Proof over_r(Proof prem) {
  const Hedge& h = prem.conclusion.antecedent;
  if (h.empty() || !h.back().is_leaf()) throw RuleError("OverR needs a trailing leaf");
  Sequent s{Hedge(h.begin(), h.end() - 1), Type::over(prem.conclusion.succedent, h.back().type)};
  return Proof{std::move(s), Rule::OverR, {}, {std::move(prem)}};
}

/// The bracket at (path, pos) must hold exactly one leaf.
inline Proof dia_l(Proof prem, const Path& path, std::size_t pos) {
  const Tree& t = tree_at(prem.conclusion.antecedent, path, pos);
  if (!t.is_bracket() || t.children.size() != 1 || !t.children[0].is_leaf())
    throw RuleError("DiaL needs a bracket around one leaf");
  Type d = Type::dia(t.children[0].type, t.index);
  Sequent s{splice(prem.conclusion.antecedent, Span{path, pos, pos + 1}, Hedge{Tree::leaf(d)}),
            prem.conclusion.succedent};
  return Proof{std::move(s), Rule::DiaL, Principal{path, pos, 0}, {std::move(prem)}};
}

inline Proof dia_r(Proof prem, int index) {
  Sequent s{Hedge{Tree::bracket(prem.conclusion.antecedent, index)}, Type::dia(prem.conclusion.succedent, index)};
  return Proof{std::move(s), Rule::DiaR, {}, {std::move(prem)}};
}

/// Wraps the leaf A at (path, pos) as a bracket around boxd A.
inline Proof box_l(Proof prem, const Path& path, std::size_t pos, int index) {
  const Type& a = leaf_at(prem.conclusion.antecedent, path, pos);
  Tree br = Tree::bracket(Hedge{Tree::leaf(Type::boxdown(a, index))}, index);
  Sequent s{splice(prem.conclusion.antecedent, Span{path, pos, pos + 1}, Hedge{br}), prem.conclusion.succedent};
  return Proof{std::move(s), Rule::BoxDownL, Principal{path, pos, 0}, {std::move(prem)}};
}

inline Proof box_r(Proof prem) {
  const Hedge& h = prem.conclusion.antecedent;
  if (h.size() != 1 || !h[0].is_bracket()) throw RuleError("BoxDownR needs a single bracket");
  Sequent s{h[0].children, Type::boxdown(prem.conclusion.succedent, h[0].index)};
  return Proof{std::move(s), Rule::BoxDownR, {}, {std::move(prem)}};
}

/// Proof of A => A for any A (eta expansion down to primitive axioms).
inline Proof identity(const Type& a) {
  switch (a.kind()) {
    case Kind::Prim: return axiom(a);
    case Kind::Unit: return unit_l(unit_r(), {}, 0);
    case Kind::Under:
      // A => A and B => B give A A\B => B
      return under_r(under_l(identity(a.left()), identity(a.right()), {}, 0));
    case Kind::Over:
      return over_r(over_l(identity(a.right()), identity(a.left()), {}, 0));
    case Kind::Prod: return prod_l(prod_r(identity(a.left()), identity(a.right())), {}, 0);
    case Kind::Dia: return dia_l(dia_r(identity(a.body()), a.index()), {}, 0);
    case Kind::BoxDown: return box_r(box_l(identity(a.body()), {}, 0, a.index()));
  }
  throw RuleError("bad type");
}

}  // namespace build

// ---- text format ----

inline void print_proof(const Proof& p, std::ostream& out, int depth = 0) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << name(p.rule) << "  " << str(p.conclusion) << '\n';
  for (const Proof& q : p.premises) print_proof(q, out, depth + 1);
}

inline std::string proof_text(const Proof& p) {
  std::ostringstream ss;
  print_proof(p, ss);
  return ss.str();
}

/// Reads the text format back. Principal positions are left empty; `check`
/// recovers them.
inline Proof parse_proof(const std::string& text) {
  struct Line {
    int depth;
    Rule rule;
    Sequent s;
  };
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    std::size_t sp = line.find_first_not_of(' ');
    if (sp % 2) throw std::runtime_error("proof line " + std::to_string(lineno) + ": odd indentation");
    std::size_t sep = line.find("  ", sp);
    std::string rule_name = line.substr(sp, sep == std::string::npos ? std::string::npos : sep - sp);
    auto r = rule_from_name(rule_name);
    if (!r) throw std::runtime_error("proof line " + std::to_string(lineno) + ": unknown rule " + rule_name);
    if (sep == std::string::npos) throw std::runtime_error("proof line " + std::to_string(lineno) + ": no sequent");
    lines.push_back(Line{static_cast<int>(sp / 2), *r, parse_sequent(line.substr(sep + 2))});
  }
  if (lines.empty()) throw std::runtime_error("empty proof");
  std::size_t i = 0;
  auto rec = [&](auto&& self, int depth) -> Proof {
    if (i >= lines.size() || lines[i].depth != depth)
      throw std::runtime_error("malformed proof indentation");
    Proof p{lines[i].s, lines[i].rule, {}, {}};
    ++i;
    while (i < lines.size() && lines[i].depth == depth + 1) p.premises.push_back(self(self, depth + 1));
    return p;
  };
  Proof root = rec(rec, 0);
  if (i != lines.size()) throw std::runtime_error("trailing proof lines");
  return root;
}

}  // namespace lambek

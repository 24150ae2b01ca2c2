#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambek {

/// A grammar symbol. Terminals and nonterminals live in separate
/// namespaces, so the terminal b and the type b are different symbols.
struct Symbol {
  std::string name;
  bool terminal = false;

  static Symbol t(std::string n) { return Symbol{std::move(n), true}; }
  static Symbol nt(std::string n) { return Symbol{std::move(n), false}; }

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.terminal == b.terminal && a.name == b.name; }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return a.terminal != b.terminal ? a.terminal < b.terminal : a.name < b.name;
  }
};

struct Production {
  std::string lhs;
  std::vector<Symbol> rhs;  // empty for an epsilon rule
  friend bool operator==(const Production& a, const Production& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
};

/// Nonterminals are canonical type strings; terminals are alphabet symbols.
struct Cfg {
  std::set<std::string> nonterminals;
  std::set<std::string> terminals;
  std::string start;
  std::vector<Production> productions;

  void add(Production p) {
    if (std::find(productions.begin(), productions.end(), p) == productions.end()) productions.push_back(std::move(p));
  }
};

/// Parse tree: `rule` is an index into the productions, or -1 for a symbol
/// of the input taken as is.
struct CfgTree {
  Symbol symbol;
  int rule = -1;
  std::vector<CfgTree> children;

  std::size_t steps() const {
    std::size_t n = rule >= 0 ? 1 : 0;
    for (const auto& c : children) n += c.steps();
    return n;
  }
};

namespace detail {

inline std::string quote(const std::string& s) { return "\"" + s + "\""; }
inline std::string text(const Symbol& s) { return s.terminal ? s.name : quote(s.name); }

/// Chart over every span with a per-span fixpoint, so unary chains and
/// nullable symbols need no grammar transformation.
class Chart {
 public:
  Chart(const Cfg& g, const std::vector<Symbol>& w) : g_(g), w_(w), n_(w.size()) {
    for (std::size_t r = 0; r < g.productions.size(); ++r) {
      std::set<std::string> seen;
      for (const Symbol& s : g.productions[r].rhs)
        if (!s.terminal && seen.insert(s.name).second) uses_[s.name].push_back(r);
    }
    cells_.assign((n_ + 1) * (n_ + 1), {});
    // the nullable set is the same for every empty span
    fill(0, 0);
    for (std::size_t i = 1; i <= n_; ++i) cell(i, i) = cell(0, 0);
    for (std::size_t len = 1; len <= n_; ++len)
      for (std::size_t i = 0; i + len <= n_; ++i) fill(i, i + len);
  }

  bool has(const Symbol& a, std::size_t i, std::size_t j) const {
    if (j == i + 1 && w_[i] == a) return true;
    return !a.terminal && cell(i, j).count(a.name) > 0;
  }

  CfgTree tree(const Symbol& a, std::size_t i, std::size_t j) const {
    if (j == i + 1 && w_[i] == a) return CfgTree{a, -1, {}};
    const Entry& e = cell(i, j).at(a.name);
    CfgTree t{a, static_cast<int>(e.rule), {}};
    const auto& rhs = g_.productions[e.rule].rhs;
    for (std::size_t k = 0; k < rhs.size(); ++k) t.children.push_back(tree(rhs[k], e.cuts[k], e.cuts[k + 1]));
    return t;
  }

 private:
  struct Entry {
    std::size_t rule;
    std::vector<std::size_t> cuts;  // boundaries of the rhs symbols
  };

  std::map<std::string, Entry>& cell(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }
  const std::map<std::string, Entry>& cell(std::size_t i, std::size_t j) const { return cells_[i * (n_ + 1) + j]; }

  bool match(const std::vector<Symbol>& rhs, std::size_t k, std::size_t x, std::size_t j,
             std::vector<std::size_t>& cuts) const {
    if (k == rhs.size()) return x == j;
    for (std::size_t y = x; y <= j; ++y) {
      if (!has(rhs[k], x, y)) continue;
      cuts.push_back(y);
      if (match(rhs, k + 1, y, j, cuts)) return true;
      cuts.pop_back();
    }
    return false;
  }

  bool try_rule(std::size_t r, std::size_t i, std::size_t j) {
    const Production& p = g_.productions[r];
    auto& c = cell(i, j);
    if (c.count(p.lhs) || (j == i + 1 && w_[i] == Symbol::nt(p.lhs))) return false;
    std::vector<std::size_t> cuts{i};
    if (!match(p.rhs, 0, i, j, cuts)) return false;
    c.emplace(p.lhs, Entry{r, std::move(cuts)});
    return true;
  }

  // one full pass, then only rules mentioning a symbol new to this cell
  void fill(std::size_t i, std::size_t j) {
    std::vector<std::string> fresh;
    for (std::size_t r = 0; r < g_.productions.size(); ++r)
      if (try_rule(r, i, j)) fresh.push_back(g_.productions[r].lhs);
    while (!fresh.empty()) {
      std::string a = std::move(fresh.back());
      fresh.pop_back();
      auto it = uses_.find(a);
      if (it == uses_.end()) continue;
      for (std::size_t r : it->second)
        if (try_rule(r, i, j)) fresh.push_back(g_.productions[r].lhs);
    }
  }

  const Cfg& g_;
  const std::vector<Symbol>& w_;
  std::size_t n_;
  std::map<std::string, std::vector<std::size_t>> uses_;
  std::vector<std::map<std::string, Entry>> cells_;
};

}  // namespace detail

/// A parse tree for nt =>* w, if there is one. `w` may mix terminals and
/// nonterminals.
inline std::optional<CfgTree> derives(const Cfg& g, const std::string& nt, const std::vector<Symbol>& w) {
  for (const auto& s : w)
    if (!(s.terminal ? g.terminals : g.nonterminals).count(s.name))
      throw std::invalid_argument("unknown symbol " + detail::text(s));
  if (!g.nonterminals.count(nt)) throw std::invalid_argument("unknown nonterminal " + nt);
  detail::Chart chart(g, w);
  if (!chart.has(Symbol::nt(nt), 0, w.size())) return std::nullopt;
  return chart.tree(Symbol::nt(nt), 0, w.size());
}

/// Terminal-string form.
inline std::optional<CfgTree> derives(const Cfg& g, const std::string& nt, const std::vector<std::string>& w) {
  std::vector<Symbol> syms;
  for (const auto& a : w) syms.push_back(Symbol::t(a));
  return derives(g, nt, syms);
}

/// Nonterminals deriving the empty string.
inline std::set<std::string> nullable(const Cfg& g) {
  std::set<std::string> out;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Production& p : g.productions) {
      if (out.count(p.lhs)) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(),
                      [&](const Symbol& s) { return !s.terminal && out.count(s.name) > 0; })) {
        out.insert(p.lhs);
        changed = true;
      }
    }
  }
  return out;
}

/// Same language minus the empty string, with no epsilon rules.
inline Cfg eps_eliminated(const Cfg& g) {
  std::set<std::string> nul = nullable(g);
  Cfg out{g.nonterminals, g.terminals, g.start, {}};
  for (const Production& p : g.productions) {
    std::vector<std::size_t> opt;
    for (std::size_t k = 0; k < p.rhs.size(); ++k)
      if (!p.rhs[k].terminal && nul.count(p.rhs[k].name)) opt.push_back(k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << opt.size()); ++mask) {
      Production q{p.lhs, {}};
      std::size_t o = 0;
      for (std::size_t k = 0; k < p.rhs.size(); ++k) {
        bool drop = o < opt.size() && opt[o] == k && ((mask >> o++) & 1);
        if (!drop) q.rhs.push_back(p.rhs[k]);
      }
      if (!q.rhs.empty()) out.add(std::move(q));
    }
  }
  return out;
}

/// Strings over the terminals of length at most n derived from the start
/// symbol, in length-then-lexicographic order.
inline std::vector<std::vector<std::string>> language_upto(const Cfg& g, std::size_t n) {
  std::vector<std::string> sigma(g.terminals.begin(), g.terminals.end());
  std::vector<std::vector<std::string>> out;
  std::vector<std::vector<std::string>> layer{{}};
  for (std::size_t len = 0; len <= n; ++len) {
    for (const auto& w : layer)
      if (derives(g, g.start, w)) out.push_back(w);
    if (len == n) break;
    std::vector<std::vector<std::string>> next;
    for (const auto& w : layer)
      for (const auto& a : sigma) {
        auto v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

inline std::string production_text(const Production& p) {
  std::string out = detail::quote(p.lhs) + " ->";
  if (p.rhs.empty()) out += " eps";
  for (const auto& s : p.rhs) out += " " + detail::text(s);
  return out;
}

inline std::string cfg_text(const Cfg& g) {
  std::ostringstream out;
  out << "start: " << detail::quote(g.start) << '\n';
  for (const Production& p : g.productions) out << production_text(p) << '\n';
  return out.str();
}

/// Reads the text format back. Quoted symbols are nonterminals, bare ones
/// terminals, and "eps" alone marks an empty right-hand side.
inline Cfg parse_cfg(const std::string& text) {
  Cfg g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cfg line " + std::to_string(lineno) + ": " + why);
  };
  auto tokens = [&](const std::string& s) {
    std::vector<std::pair<std::string, bool>> out;  // (text, quoted)
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
        ++i;
      } else if (s[i] == '"') {
        std::size_t e = s.find('"', i + 1);
        if (e == std::string::npos) fail("unterminated quote");
        out.emplace_back(s.substr(i + 1, e - i - 1), true);
        i = e + 1;
      } else {
        std::size_t e = s.find_first_of(" \t\r", i);
        if (e == std::string::npos) e = s.size();
        out.emplace_back(s.substr(i, e - i), false);
        i = e;
      }
    }
    return out;
  };
  bool have_start = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty() || (!t[0].second && t[0].first[0] == '#')) continue;
    if (!have_start) {
      if (t.size() != 2 || t[0].first != "start:" || !t[1].second) fail("expected start: \"<type>\"");
      g.start = t[1].first;
      g.nonterminals.insert(g.start);
      have_start = true;
      continue;
    }
    if (t.size() < 3 || !t[0].second || t[1].second || t[1].first != "->") fail("expected \"<lhs>\" -> ...");
    Production p{t[0].first, {}};
    g.nonterminals.insert(p.lhs);
    bool eps = t.size() == 3 && !t[2].second && t[2].first == "eps";
    if (!eps)
      for (std::size_t k = 2; k < t.size(); ++k) {
        p.rhs.push_back(Symbol{t[k].first, !t[k].second});
        (t[k].second ? g.nonterminals : g.terminals).insert(t[k].first);
      }
    g.add(std::move(p));
  }
  if (!have_start) throw std::invalid_argument("cfg: missing start line");
  return g;
}

inline void print_cfg_tree(const Cfg& g, const CfgTree& t, std::ostream& out, int depth = 0) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (t.rule < 0) {
    out << detail::text(t.symbol) << '\n';
    return;
  }
  out << production_text(g.productions[static_cast<std::size_t>(t.rule)]) << '\n';
  for (const auto& c : t.children) print_cfg_tree(g, c, out, depth + 1);
}

}  // namespace lambek

#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hedge.hpp"
#include "type.hpp"

namespace lambek {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

enum class Tok { Ident, Unit, Dia, Box, Under, Over, Prod, LParen, RParen, LBrack, RBrack, Arrow, Hole, End };

struct Token {
  Tok kind;
  std::string text;
  int index = 0;
  std::size_t pos = 0;
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline int read_index(std::string_view s, std::size_t& i, std::size_t start) {
  std::size_t j = i;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
  if (j == i) throw ParseError("expected index", i);
  int v = std::stoi(std::string(s.substr(i, j - i)));
  if (v <= 0) throw ParseError("index must be positive", start);
  i = j;
  return v;
}

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto push = [&](Tok k, std::string text, int idx = 0) { out.push_back(Token{k, std::move(text), idx, start}); };
    switch (c) {
      case '\\': push(Tok::Under, "\\"); ++i; continue;
      case '/': push(Tok::Over, "/"); ++i; continue;
      case '*': push(Tok::Prod, "*"); ++i; continue;
      case '(': push(Tok::LParen, "("); ++i; continue;
      case ')': push(Tok::RParen, ")"); ++i; continue;
      case '[':
      case ']': {
        ++i;
        int idx = 0;
        if (i < s.size() && s[i] == ':') {
          ++i;
          idx = read_index(s, i, start);
        }
        push(c == '[' ? Tok::LBrack : Tok::RBrack, std::string(1, c), idx);
        continue;
      }
      case '=':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          push(Tok::Arrow, "=>");
          i += 2;
          continue;
        }
        throw ParseError("unexpected '='", i);
      default: break;
    }
    if (c == '_' && (i + 1 >= s.size() || !ident_char(s[i + 1]))) {
      push(Tok::Hole, "_");
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (s.substr(i, j - i) != "1") throw ParseError("only the numeral 1 denotes a type", i);
      push(Tok::Unit, "1");
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      if (word == "dia" || word == "boxd") {
        int idx = 0;
        if (i < s.size() && s[i] == ':') {
          ++i;
          idx = read_index(s, i, start);
        }
        push(word == "dia" ? Tok::Dia : Tok::Box, word, idx);
      } else {
        push(Tok::Ident, word);
      }
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back(Token{Tok::End, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool at(Tok k) const { return peek().kind == k; }
  void expect(Tok k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    next();
  }

  static bool starts_type(Tok k) {
    return k == Tok::Ident || k == Tok::Unit || k == Tok::Dia || k == Tok::Box || k == Tok::LParen;
  }

  Type primary() {
    Token t = next();
    switch (t.kind) {
      case Tok::Ident: return Type::prim(t.text);
      case Tok::Unit: return Type::unit();
      case Tok::Dia: note(t.index, t.pos); return Type::dia(primary(), t.index);
      case Tok::Box: note(t.index, t.pos); return Type::boxdown(primary(), t.index);
      case Tok::LParen: {
        Type inner = type();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: throw ParseError("expected a type", t.pos);
    }
  }

  Type type() {
    Type lhs = primary();
    Tok k = peek().kind;
    if (k != Tok::Under && k != Tok::Over && k != Tok::Prod) return lhs;
    next();
    Type rhs = primary();
    Tok k2 = peek().kind;
    if (k2 == Tok::Under || k2 == Tok::Over || k2 == Tok::Prod)
      throw ParseError("nested binary operators need parentheses", peek().pos);
    if (k == Tok::Under) return Type::under(lhs, rhs);
    if (k == Tok::Over) return Type::over(lhs, rhs);
    return Type::prod(lhs, rhs);
  }

  Hedge hedge(bool allow_hole) {
    Hedge h;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::LBrack) {
        Token open = next();
        note(open.index, open.pos);
        Hedge inner = hedge(allow_hole);
        if (!at(Tok::RBrack)) throw ParseError("expected ']'", peek().pos);
        Token close = next();
        if (close.index != open.index) throw ParseError("mismatched bracket indices", close.pos);
        h.push_back(Tree::bracket(std::move(inner), open.index));
      } else if (t.kind == Tok::Hole) {
        if (!allow_hole) throw ParseError("hole outside a context", t.pos);
        next();
        h.push_back(Tree::hole());
      } else if (starts_type(t.kind)) {
        h.push_back(Tree::leaf(type()));
      } else {
        return h;
      }
    }
  }

  void finish() {
    if (!at(Tok::End)) throw ParseError("unexpected trailing input", peek().pos);
  }

 private:
  void note(int index, std::size_t pos) {
    if (index > 0) seen_indexed_ = true;
    else seen_plain_ = true;
    if (seen_indexed_ && seen_plain_) throw ParseError("mixed indexed and non-indexed syntax", pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  bool seen_indexed_ = false;
  bool seen_plain_ = false;
};

}  // namespace detail

inline Type parse_type(std::string_view text) {
  detail::Parser p(text);
  Type t = p.type();
  p.finish();
  return t;
}

inline Hedge parse_hedge(std::string_view text) {
  detail::Parser p(text);
  Hedge h = p.hedge(false);
  p.finish();
  return h;
}

/// Hedge with exactly one "_" hole.
inline Hedge parse_context(std::string_view text) {
  detail::Parser p(text);
  Hedge h = p.hedge(true);
  p.finish();
  Path path;
  std::size_t pos = 0;
  int count = 0;
  find_hole(h, path, pos, count);
  if (count != 1) throw ParseError("context must contain exactly one hole", 0);
  return h;
}

inline Sequent parse_sequent(std::string_view text) {
  detail::Parser p(text);
  Sequent s;
  s.antecedent = p.hedge(false);
  p.expect(detail::Tok::Arrow, "'=>'");
  s.succedent = p.type();
  p.finish();
  return s;
}

}  // namespace lambek

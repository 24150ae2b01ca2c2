#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hedge.hpp"

namespace lambek {

enum class Calculus { Ldia, LdiaM, LstarDia, LstarDiaM, L1starDia, L1starDiaM, L, Lstar, L1star };

inline const char* name(Calculus c) {
  switch (c) {
    case Calculus::Ldia: return "Ldia";
    case Calculus::LdiaM: return "LdiaM";
    case Calculus::LstarDia: return "LstarDia";
    case Calculus::LstarDiaM: return "LstarDiaM";
    case Calculus::L1starDia: return "L1starDia";
    case Calculus::L1starDiaM: return "L1starDiaM";
    case Calculus::L: return "L";
    case Calculus::Lstar: return "Lstar";
    case Calculus::L1star: return "L1star";
  }
  return "?";
}

inline std::optional<Calculus> calculus_from_name(std::string_view s) {
  for (Calculus c : {Calculus::Ldia, Calculus::LdiaM, Calculus::LstarDia, Calculus::LstarDiaM,
                     Calculus::L1starDia, Calculus::L1starDiaM, Calculus::L, Calculus::Lstar,
                     Calculus::L1star})
    if (s == name(c)) return c;
  return std::nullopt;
}

inline bool multimodal(Calculus c) {
  return c == Calculus::LdiaM || c == Calculus::LstarDiaM || c == Calculus::L1starDiaM;
}
inline bool starred(Calculus c) { return c != Calculus::Ldia && c != Calculus::LdiaM && c != Calculus::L; }
inline bool has_unit(Calculus c) {
  return c == Calculus::L1starDia || c == Calculus::L1starDiaM || c == Calculus::L1star;
}
inline bool has_brackets(Calculus c) { return c != Calculus::L && c != Calculus::Lstar && c != Calculus::L1star; }

/// Indexed counterpart used after thin indexing.
inline Calculus indexed_variant(Calculus c) {
  switch (c) {
    case Calculus::Ldia: return Calculus::LdiaM;
    case Calculus::LstarDia: return Calculus::LstarDiaM;
    case Calculus::L1starDia: return Calculus::L1starDiaM;
    default: return c;
  }
}

namespace detail {

inline std::string type_problem(const Type& t, Calculus c) {
  switch (t.kind()) {
    case Kind::Prim: return {};
    case Kind::Unit: return has_unit(c) ? "" : "unit not allowed in " + std::string(name(c));
    case Kind::Dia:
    case Kind::BoxDown:
      if (!has_brackets(c)) return "modalities not allowed in " + std::string(name(c));
      if (multimodal(c) && t.index() == 0) return "unindexed modality in " + std::string(name(c));
      if (!multimodal(c) && t.index() != 0) return "indexed modality in " + std::string(name(c));
      return type_problem(t.body(), c);
    default: {
      std::string e = type_problem(t.left(), c);
      return e.empty() ? type_problem(t.right(), c) : e;
    }
  }
}

inline std::string hedge_problem(const Hedge& h, Calculus c) {
  for (const Tree& t : h) {
    if (t.is_hole()) return "unexpected hole";
    if (t.is_leaf()) {
      std::string e = type_problem(t.type, c);
      if (!e.empty()) return e;
      continue;
    }
    if (!has_brackets(c)) return "brackets not allowed in " + std::string(name(c));
    if (multimodal(c) && t.index == 0) return "unindexed bracket in " + std::string(name(c));
    if (!multimodal(c) && t.index != 0) return "indexed bracket in " + std::string(name(c));
    if (!starred(c) && t.children.empty()) return "empty bracket pair in " + std::string(name(c));
    std::string e = hedge_problem(t.children, c);
    if (!e.empty()) return e;
  }
  return {};
}

}  // namespace detail

/// Empty string when `s` is a well-formed sequent of `c`, otherwise a reason.
inline std::string sequent_problem(const Sequent& s, Calculus c) {
  if (!starred(c) && s.antecedent.empty()) return "empty antecedent in " + std::string(name(c));
  std::string e = detail::hedge_problem(s.antecedent, c);
  return e.empty() ? detail::type_problem(s.succedent, c) : e;
}

inline bool well_formed(const Sequent& s, Calculus c) { return sequent_problem(s, c).empty(); }

}  // namespace lambek

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lambek/bracket_step.hpp"
#include "lambek/check.hpp"
#include "lambek/compile.hpp"
#include "lambek/cut.hpp"
#include "lambek/family.hpp"
#include "lambek/interpolate.hpp"
#include "lambek/parse.hpp"
#include "lambek/prover.hpp"
#include "lambek/recognize.hpp"
#include "lambek/reduce.hpp"
#include "lambek/rulesets.hpp"
#include "lambek/thin.hpp"

namespace lambek {

struct Report {
  int id = 0;
  std::string claim;
  bool pass = true;
  std::map<std::string, long long> counts;
  double seconds = 0;
  std::vector<std::string> failures;  // first few reproducers
  std::vector<std::string> notes;
  std::vector<std::string> artifacts;

  Report() = default;
  Report(int id_, std::string claim_) : id(id_), claim(std::move(claim_)) {}

  void fail(const std::string& why) {
    pass = false;
    ++counts["failures"];
    if (failures.size() < 20) failures.push_back(why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

struct HarnessOptions {
  std::uint64_t seed = 1;
  long timeout_ms = 60000;  // per prover query
  std::string data_dir;
  std::string out_dir;
  std::string cache_dir;
  int pentus_trials = 10000;
};

/// Thin-indexed conclusions gathered by the sweeps, rechecked against the
/// free-group interpretation.
struct ThinPool {
  std::vector<Sequent> sequents;
};

struct BundledGrammar {
  std::string file;
  Calculus calculus;
  std::size_t max_len;
};

inline std::vector<BundledGrammar> bundled_grammars() {
  return {{"anbn.lg", Calculus::Ldia, 5}, {"brackets.lg", Calculus::Ldia, 5}, {"starred.lg", Calculus::LstarDia, 4}};
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// types with exactly k connectives
inline std::vector<std::vector<Type>> types_by_connectives(const std::set<std::string>& prims, int k) {
  std::vector<std::vector<Type>> w(static_cast<std::size_t>(k + 1));
  for (const auto& p : prims) w[0].push_back(Type::prim(p));
  for (int c = 1; c <= k; ++c) {
    auto& out = w[static_cast<std::size_t>(c)];
    for (const Type& a : w[static_cast<std::size_t>(c - 1)]) {
      out.push_back(Type::dia(a));
      out.push_back(Type::boxdown(a));
    }
    for (int a = 0; a < c; ++a)
      for (const Type& x : w[static_cast<std::size_t>(a)])
        for (const Type& y : w[static_cast<std::size_t>(c - 1 - a)]) {
          out.push_back(Type::under(x, y));
          out.push_back(Type::over(x, y));
          out.push_back(Type::prod(x, y));
        }
  }
  return w;
}

// every weight vector (w_1..w_n, w_succ) with sum at most k
inline void for_each_weights(std::size_t n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w(n + 1, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == w.size()) {
      f(w);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      w[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, k);
}

inline GroupWord random_word(std::mt19937_64& rng, std::size_t max_len, const std::vector<std::string>& gens) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  GroupWord w;
  std::size_t l = len(rng);
  while (w.size() < l) w.push(Letter{Generator::prim(gens[pick(rng)]), sign(rng) ? 1 : -1});
  return w;
}

inline std::string join(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& a : w) out += (out.empty() ? "" : " ") + a;
  return out.empty() ? "(empty)" : out;
}

}  // namespace detail

/// 1. Golden sequents.
inline Report run_golden(const HarnessOptions& opt) {
  detail::Stopwatch sw;
  Report r{1, "golden sequents"};
  {
    Sequent s = parse_sequent("[ [ p ] dia p \\ p ] => boxd dia dia p");
    auto p = prove(s, Calculus::Ldia, opt.timeout_ms);
    r.expect(p.has_value(), "example sequent unprovable in Ldia");
    if (p) {
      Proof back = parse_proof(proof_text(*p));
      r.expect(check(back, Calculus::Ldia), "emitted derivation does not check");
    }
  }
  const Sequent cx = parse_sequent("dia boxd p dia boxd q => dia boxd (p * q)");
  r.expect(!provable(cx, Calculus::Ldia, opt.timeout_ms), "counterexample provable in Ldia");
  {
    Hedge h;
    for (const Tree& t : cx.antecedent) h.push_back(Tree::leaf(translate_flat(t.type)));
    Sequent flat{h, translate_flat(cx.succedent)};
    auto p = prove_flat(flat, Calculus::L, opt.timeout_ms);
    r.expect(p.has_value(), "translation not provable in L: " + str(flat));
    if (p) r.expect(check(*p, Calculus::L), "translation proof does not check");
  }
  {
    Sequent eq1 = parse_sequent("p3/dia:1(p1 * dia:2(p2/p2)) [:1 p1 [:2 ]:2 ]:1 => p3");
    auto p = prove(eq1, Calculus::L1starDiaM, opt.timeout_ms);
    r.expect(p.has_value(), "unit-guard sequent unprovable");
    if (p) {
      auto res = extract_interpolant(*p, Span{{}, 1, 2}, Calculus::L1starDiaM);
      r.expect(res.interpolant == parse_type("dia:1 (p1 * dia:2 1)"), "interpolant is " + res.interpolant.str());
      r.expect(verify_interpolant(eq1, Span{{}, 1, 2}, res, Calculus::L1starDiaM).all(), "interpolant checks fail");
    }
  }
  r.seconds = sw.seconds();
  return r;
}

/// 2. Thin indexing of the example proof.
inline Report run_thin(const HarnessOptions& opt) {
  detail::Stopwatch sw;
  Report r{2, "thin indexing"};
  auto p = prove(parse_sequent("[ [ p ] dia p \\ p ] => boxd dia dia p"), Calculus::Ldia, opt.timeout_ms);
  if (!p) {
    r.fail("example sequent unprovable");
  } else {
    ThinResult t = thin_index(*p, Calculus::Ldia);
    const std::string want = "[:2 [:1 p1 ]:1 dia:1 p1 \\ p2 ]:2 => boxd:3 dia:3 dia:2 p2";
    r.expect(str(t.proof.conclusion) == want, "indexed conclusion is " + str(t.proof.conclusion));
    r.expect(is_thin(t.proof.conclusion), "conclusion not thin");
    r.expect(check(t.proof, Calculus::LdiaM), "indexed proof does not check");
    r.expect(deindex(t.proof.conclusion, t.theta) == p->conclusion, "deindex does not recover the original");
  }
  r.seconds = sw.seconds();
  return r;
}

/// 3. Interpolation over every small provable sequent and every partition.
inline Report run_interpolation_sweep(const HarnessOptions& opt, ThinPool& pool) {
  detail::Stopwatch sw;
  Report r{3, "interpolation sweep"};
  const int k = 3;
  auto by_weight = detail::types_by_connectives({"p", "q"}, k);
  Prover prover(Calculus::Ldia, opt.timeout_ms);
  for (std::size_t n = 1; n <= 3; ++n)
    detail::for_each_weights(n, k, [&](const std::vector<int>& w) {
      std::vector<std::vector<Type>> pools;
      for (int x : w) pools.push_back(by_weight[static_cast<std::size_t>(x)]);
      std::vector<std::size_t> ix(n + 1, 0);
      for (;;) {
        std::vector<Type> ys;
        for (std::size_t i = 0; i < n; ++i) ys.push_back(pools[i][ix[i]]);
        const Type& goal = pools[n][ix[n]];
        const int budget = bracket_budget(ys, goal);
        for (int b = 0; b <= budget; ++b)
          for (const Hedge& h : enum_hedges(ys, b, false)) {
            ++r.counts["sequents"];
            Sequent s{h, goal};
            auto p = prover.prove(s);
            if (!p) continue;
            ++r.counts["provable"];
            r.expect(interpret_plain(h) == interpret_plain(goal), "provable with different images: " + str(s));
            for (const Span& sp : all_spans(h, false)) {
              ++r.counts["partitions"];
              try {
                auto res = extract_interpolant(*p, sp, Calculus::Ldia);
                r.expect(verify_interpolant(s, sp, res, Calculus::Ldia).all(),
                         str(s) + " selecting " + str(slice(h, sp)) + " gives " + res.interpolant.str());
              } catch (const std::exception& e) {
                r.fail(str(s) + " selecting " + str(slice(h, sp)) + ": " + e.what());
              }
            }
            ThinResult t = thin_index(*p, Calculus::Ldia);
            pool.sequents.push_back(t.proof.conclusion);
            r.expect(is_thin(t.proof.conclusion), "not thin: " + str(t.proof.conclusion));
            for (const Span& sp : all_spans(t.proof.conclusion.antecedent, false)) {
              ++r.counts["thin_partitions"];
              try {
                auto res = extract_interpolant(t.proof, sp, Calculus::LdiaM);
                r.expect(verify_interpolant(t.proof.conclusion, sp, res, Calculus::LdiaM).all(),
                         "thin " + str(t.proof.conclusion) + " selecting " + str(slice(t.proof.conclusion.antecedent, sp)));
                r.expect(res.interpolant.length() ==
                             static_cast<int>(wlen(interpret(slice(t.proof.conclusion.antecedent, sp)))),
                         "interpolant length differs from the image length on " + str(t.proof.conclusion) + " selecting " +
                             str(slice(t.proof.conclusion.antecedent, sp)));
              } catch (const std::exception& e) {
                r.fail("thin " + str(t.proof.conclusion) + ": " + e.what());
              }
            }
          }
        if (prover.memo_size() > 1000000) prover.clear();
        std::size_t i = n + 1;
        while (i > 0 && ++ix[i - 1] == pools[i - 1].size()) ix[--i] = 0;
        if (i == 0) break;
      }
    });
  r.seconds = sw.seconds();
  return r;
}

/// 4. Pentus split on seeded random identity products.
inline Report run_pentus_trials(const HarnessOptions& opt) {
  detail::Stopwatch sw;
  Report r{4, "adjacent split"};
  std::mt19937_64 rng(opt.seed);
  const std::vector<std::string> gens{"a", "b", "c"};
  std::uniform_int_distribution<std::size_t> pick_n(2, 6);
  for (int trial = 0; trial < opt.pentus_trials; ++trial) {
    const std::size_t n = pick_n(rng);
    // telescoping u_i = x_{i-1}^{-1} x_i with x_0 = x_n = e and |x_i| <= 2
    std::vector<GroupWord> xs{GroupWord()};
    for (std::size_t i = 1; i < n; ++i) xs.push_back(detail::random_word(rng, 2, gens));
    xs.push_back(GroupWord());
    std::vector<GroupWord> us;
    for (std::size_t i = 1; i <= n; ++i) us.push_back(mul(inv(xs[i - 1]), xs[i]));
    ++r.counts["trials"];
    std::string tuple;
    for (const auto& u : us) tuple += "[" + str(u) + "]";
    try {
      for (const auto& u : us) r.expect(wlen(u) <= 4, "generator produced a long word " + tuple);
      std::size_t k = pentus_split(us);
      bool ok = k >= 1 && k < n && wlen(mul(us[k - 1], us[k])) <= std::max(wlen(us[k - 1]), wlen(us[k]));
      r.expect(ok, "invalid split for " + tuple);
      if (ok) ++r.counts["splits"];
    } catch (const std::exception& e) {
      r.fail(tuple + ": " + e.what());
    }
  }
  r.seconds = sw.seconds();
  return r;
}

/// 5. Cut-only reduction of every provable flat sequent with n <= 5.
inline Report run_pentus_reduce(const HarnessOptions& opt) {
  detail::Stopwatch sw;
  Report r{5, "pentus_reduce"};
  RuleSetOptions ro;
  ro.timeout_ms = opt.timeout_ms;
  ro.cache_dir = opt.cache_dir;
  RuleSets rules = build_rulesets({"p", "q"}, 2, Calculus::Ldia, ro);
  std::unordered_map<std::string, std::vector<std::size_t>> by_word;
  std::vector<GroupWord> words;
  for (std::size_t i = 0; i < rules.types.size(); ++i) {
    words.push_back(interpret_plain(rules.types[i]));
    by_word[str(words.back())].push_back(i);
  }
  Prover prover(Calculus::Ldia, opt.timeout_ms);
  std::vector<std::size_t> idx(rules.types.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_tuple<std::size_t>(idx, n, [&](const std::vector<std::size_t>& tup) {
      ++r.counts["tuples"];
      GroupWord w;
      for (std::size_t i : tup) w *= words[i];
      auto it = by_word.find(str(w));
      if (it == by_word.end()) return;
      Hedge h;
      for (std::size_t i : tup) h.push_back(Tree::leaf(rules.types[i]));
      for (std::size_t g : it->second) {
        Sequent s{h, rules.types[g]};
        ++r.counts["candidates"];
        if (!prover.provable(s)) continue;
        ++r.counts["provable"];
        try {
          CutDerivation d = pentus_reduce(s, prover, [&](const Sequent& q, bool ok) {
            ++r.counts["intermediate"];
            r.expect(ok, "intermediate unprovable: " + str(q) + " from " + str(s));
          });
          r.expect(replay(d) && d.conclusion == s, "replay fails for " + str(s));
          std::vector<Sequent> leaves;
          cut_leaves(d, leaves);
          for (const Sequent& l : leaves) r.expect(rules.in_S(l), "leaf " + str(l) + " not in S, from " + str(s));
          r.counts["cuts"] += static_cast<long long>(d.cuts());
        } catch (const std::exception& e) {
          r.fail(str(s) + ": " + e.what());
        }
      }
      if (prover.memo_size() > 2000000) prover.clear();
    });
  r.seconds = sw.seconds();
  return r;
}

namespace detail {

inline void cut_population(Report& r, const std::string& tag, const std::set<std::string>& prims, int m,
                           Calculus calc, std::size_t max_yield, const HarnessOptions& opt, ThinPool& pool) {
  RuleSetOptions ro;
  ro.timeout_ms = opt.timeout_ms;
  ro.cache_dir = opt.cache_dir;
  RuleSets rules = build_rulesets(prims, m, calc, ro);
  const bool empty_ok = starred(calc);
  Prover prover(calc, opt.timeout_ms);
  const std::size_t lo = empty_ok ? 0 : 1;
  for (std::size_t n = lo; n <= max_yield; ++n)
    for_each_tuple<Type>(rules.types, n, [&](const std::vector<Type>& ys) {
      for (const Type& goal : rules.types) {
        const int budget = bracket_budget(ys, goal);
        for (int b = 0; b <= budget; ++b)
          for (const Hedge& h : enum_hedges(ys, b, empty_ok)) {
            if (h.empty() && !empty_ok) continue;
            Sequent s{h, goal};
            ++r.counts[tag + "_sequents"];
            auto d = cut_derives(rules.T, s);
            auto p = prover.prove(s);
            if (d) {
              ++r.counts[tag + "_cut_derivable"];
              r.expect(replay(*d) && d->conclusion == s, tag + ": bad cut derivation for " + str(s));
              std::vector<Sequent> leaves;
              cut_leaves(*d, leaves);
              for (const Sequent& l : leaves) r.expect(rules.in_T(l), tag + ": leaf outside T " + str(l));
            }
            if (p) {
              ++r.counts[tag + "_provable"];
              pool.sequents.push_back(thin_index(*p, calc).proof.conclusion);
            }
            if (d.has_value() != p.has_value())
              r.fail(tag + ": " + str(s) + (p ? " provable but not cut-derivable" : " cut-derivable but unprovable"));
          }
      }
      if (prover.memo_size() > 1000000) prover.clear();
    });
}

}  // namespace detail

/// 6. Cut completeness for T (plain) and T' (guarded).
inline Report run_cut_completeness(const HarnessOptions& opt, ThinPool& pool) {
  detail::Stopwatch sw;
  Report r{6, "cut completeness"};
  detail::cut_population(r, "plain_m2", {"p"}, 2, Calculus::Ldia, 4, opt, pool);
  detail::cut_population(r, "guarded_m2", {"p"}, 2, Calculus::L1starDia, 4, opt, pool);
  // with m = 2 the plain types have no modalities, so no brackets; m = 3
  // brings bracketed sequents in (yield 3 takes over ten minutes here)
  detail::cut_population(r, "plain_m3", {"p"}, 3, Calculus::Ldia, 2, opt, pool);
  r.seconds = sw.seconds();
  return r;
}

/// 7. L(G) against L(G') for every bundled grammar.
inline Report run_equivalence(const HarnessOptions& opt) {
  detail::Stopwatch sw;
  Report r{7, "grammar equivalence"};
  for (const BundledGrammar& bg : bundled_grammars()) {
    const std::string path = (std::filesystem::path(opt.data_dir) / bg.file).string();
    Grammar g;
    try {
      g = load_grammar(path);
    } catch (const std::exception& e) {
      r.fail(bg.file + ": " + e.what());
      continue;
    }
    CompileOptions co;
    co.rules.timeout_ms = opt.timeout_ms;
    co.rules.cache_dir = opt.cache_dir;
    detail::Stopwatch csw;
    Compiled comp = compile_grammar(g, bg.calculus, co);
    r.notes.push_back(bg.file + ": m=" + std::to_string(g.bound()) + ", " + std::to_string(comp.rules.types.size()) +
                      " nonterminals, " + std::to_string(comp.cfg.productions.size()) + " productions, compiled in " +
                      std::to_string(csw.seconds()) + " s");
    if (!opt.out_dir.empty()) {
      auto cfg_path = std::filesystem::path(opt.out_dir) / (bg.file + ".cfg");
      std::ofstream(cfg_path) << cfg_text(comp.cfg);
      r.artifacts.push_back(cfg_path.string());
    }
    Prover prover(bg.calculus, opt.timeout_ms);
    std::string vector_g, vector_cfg, members;
    for (const auto& w : strings_upto(g.alphabet, bg.max_len)) {
      ++r.counts[bg.file + "_strings"];
      Recognition rec = recognize(g, w, bg.calculus, prover);
      bool in_cfg = derives(comp.cfg, comp.cfg.start, w).has_value();
      vector_g += rec.member ? '1' : '0';
      vector_cfg += in_cfg ? '1' : '0';
      if (rec.member) {
        ++r.counts[bg.file + "_members"];
        if (members.size() < 400) members += (members.empty() ? "" : ", ") + detail::join(w);
      }
      r.counts[bg.file + "_hedges"] += rec.hedges;
      r.expect(rec.member == in_cfg, bg.file + ": '" + detail::join(w) + "' G=" + std::to_string(rec.member) +
                                         " G'=" + std::to_string(in_cfg));
      r.expect(!rec.over_budget, bg.file + ": witness beyond the bracket bound " +
                                     (rec.over_budget ? str(*rec.over_budget) : std::string()));
    }
    r.expect(vector_g == vector_cfg, bg.file + ": membership vectors differ");
    r.notes.push_back(bg.file + " members up to length " + std::to_string(bg.max_len) + ": " + members);
  }
  r.seconds = sw.seconds();
  return r;
}

/// 8. The A_i family.
inline Report run_ai_family(const HarnessOptions& opt, int max_i = 4) {
  detail::Stopwatch sw;
  Report r{8, "A_i family"};
  for (int i = 0; i <= max_i; ++i) {
    r.expect(a_type(i).length() == 1, "||A_" + std::to_string(i) + "|| = " + std::to_string(a_type(i).length()));
    Sequent id{Hedge{Tree::leaf(a_type(i))}, a_type(i)};
    r.expect(prove_flat(id, Calculus::L1star, opt.timeout_ms).has_value(), "A_i => A_i unprovable for i = " + std::to_string(i));
    for (int j = 0; j < i; ++j) {
      ++r.counts["pairs"];
      Sequent s{Hedge{Tree::leaf(a_type(i))}, a_type(j)};
      auto p = prove_flat(s, Calculus::L1star, opt.timeout_ms);
      if (p) {
        ++r.counts["provable_pairs"];
        r.fail("A_" + std::to_string(i) + " => A_" + std::to_string(j) + " is provable" +
               (check(*p, Calculus::L1star) ? " (derivation checks): " : " (derivation does not check): ") + str(s));
      }
    }
  }
  for (int i = 2; i <= 3; ++i) {
    Proof p = a_family_proof(i);
    r.expect(check(p, Calculus::L1star), "family proof does not check for i = " + std::to_string(i));
    const std::size_t n = p.conclusion.antecedent.size();
    Span sel{{}, static_cast<std::size_t>(i), n};
    auto res = extract_interpolant(p, sel, Calculus::L1star);
    r.expect(res.interpolant == a_type(i), "interpolant for i = " + std::to_string(i) + " is " + res.interpolant.str());
    r.expect(verify_interpolant(p.conclusion, sel, res, Calculus::L1star).all(), "interpolant checks fail");
  }
  if (r.counts["provable_pairs"] > 0)
    r.notes.push_back("A_{j+1} => A_j follows from Y (Y\\1) => 1 with Y = 1/A_{j-1}, so A_1, A_2, ... are "
                      "interderivable; only A_i => A_0 is unprovable");
  r.seconds = sw.seconds();
  return r;
}

/// 9. interpret(antecedent) = interpret(succedent) on the gathered thin
/// sequents.
inline Report run_group_soundness(const ThinPool& pool) {
  detail::Stopwatch sw;
  Report r{9, "free-group soundness"};
  for (const Sequent& s : pool.sequents) {
    ++r.counts["sequents"];
    r.expect(interpret(s.antecedent) == interpret(s.succedent), "images differ: " + str(s));
  }
  r.expect(!pool.sequents.empty(), "no sequents gathered");
  r.seconds = sw.seconds();
  return r;
}

inline nlohmann::json report_json(const Report& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["claim"] = r.claim;
  j["status"] = r.pass ? "pass" : "fail";
  j["counts"] = r.counts;
  j["seconds"] = r.seconds;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["artifacts"] = r.artifacts;
  return j;
}

inline std::string report_line(const Report& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.claim;
  out << "  (" << std::fixed;
  out.precision(2);
  out << r.seconds << " s";
  for (const auto& [k, v] : r.counts) out << ", " << k << "=" << v;
  out << ")";
  return out.str();
}

inline std::string report_text(const std::vector<Report>& rs) {
  std::ostringstream out;
  for (const Report& r : rs) {
    out << report_line(r) << '\n';
    for (const auto& n : r.notes) out << "    note: " << n << '\n';
    for (const auto& f : r.failures) out << "    fail: " << f << '\n';
    for (const auto& a : r.artifacts) out << "    artifact: " << a << '\n';
  }
  return out.str();
}

inline void write_reports(const std::vector<Report>& rs, const std::string& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json all = nlohmann::json::array();
  for (const Report& r : rs) all.push_back(report_json(r));
  std::ofstream(std::filesystem::path(dir) / "report.json") << all.dump(2) << '\n';
  std::ofstream(std::filesystem::path(dir) / "report.txt") << report_text(rs);
}

/// Runs the selected criteria (all when empty) in order; `on_done` sees each
/// report as soon as it is ready.
inline std::vector<Report> run_harness(const HarnessOptions& opt, const std::set<int>& only = {},
                                       const std::function<void(const Report&)>& on_done = {}) {
  auto want = [&](int id) { return only.empty() || only.count(id) > 0; };
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);
  std::vector<Report> out;
  ThinPool pool;
  auto add = [&](Report r) {
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  };
  if (want(1)) add(run_golden(opt));
  if (want(2)) add(run_thin(opt));
  if (want(3) || want(9)) {
    Report r = run_interpolation_sweep(opt, pool);
    if (want(3)) add(std::move(r));
  }
  if (want(4)) add(run_pentus_trials(opt));
  if (want(5)) add(run_pentus_reduce(opt));
  if (want(6) || want(9)) {
    Report r = run_cut_completeness(opt, pool);
    if (want(6)) add(std::move(r));
  }
  if (want(7)) add(run_equivalence(opt));
  if (want(8)) add(run_ai_family(opt));
  if (want(9)) add(run_group_soundness(pool));
  return out;
}

}  // namespace lambek

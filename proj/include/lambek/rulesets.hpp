#pragma once

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "enumerate.hpp"
#include "freegroup.hpp"
#include "parse.hpp"
#include "prover.hpp"

namespace lambek {

inline constexpr const char* kToolVersion = "lambek 0.1";

enum class RuleMode { Plain, Guarded };

/// S: provable flat sequents with at most two antecedent types of length
/// at most m. T adds the bracket bridges.
struct RuleSets {
  RuleMode mode = RuleMode::Plain;
  std::set<std::string> prims;
  int m = 0;
  Calculus calculus = Calculus::Ldia;
  std::vector<Type> types;
  std::vector<Sequent> S;
  std::vector<Sequent> T;
  bool from_cache = false;

  bool in_S(const Sequent& s) const { return s_index_.count(str(s)) > 0; }
  bool in_T(const Sequent& s) const { return t_index_.count(str(s)) > 0; }
  bool is_type(const Type& t) const { return type_index_.count(t.str()) > 0; }

  void index() {
    s_index_.clear();
    t_index_.clear();
    type_index_.clear();
    for (const Sequent& s : S) s_index_.insert(str(s));
    for (const Sequent& s : T) t_index_.insert(str(s));
    for (const Type& t : types) type_index_.insert(t.str());
  }

  /// Canonical proof of a member, recomputed on demand.
  std::optional<Proof> proof_of(const Sequent& s, long timeout_ms = 0) const { return prove(s, calculus, timeout_ms); }

 private:
  std::unordered_set<std::string> s_index_, t_index_, type_index_;
};

struct RuleSetOptions {
  unsigned threads = 1;
  long timeout_ms = 0;
  std::string cache_dir;  // empty disables the cache
};

/// Bridges: <A> => dia A and <boxd A> => A for ||A|| <= m-2, and <> => dia 1
/// in guarded mode.
inline std::vector<Sequent> bracket_bridges(const std::vector<Type>& types, int m, RuleMode mode) {
  std::vector<Sequent> out;
  if (mode == RuleMode::Guarded) out.push_back(Sequent{Hedge{Tree::bracket({})}, Type::dia(Type::unit())});
  for (const Type& a : types) {
    if (a.length() > m - 2) continue;
    out.push_back(Sequent{Hedge{Tree::bracket(Hedge{Tree::leaf(a)})}, Type::dia(a)});
    out.push_back(Sequent{Hedge{Tree::bracket(Hedge{Tree::leaf(Type::boxdown(a))})}, a});
  }
  return out;
}

/// Candidates for S in canonical order: n = 0 (guarded only), 1, 2 with the
/// succedent drawn from the types whose group image matches. The image is a
/// necessary condition for provability.
inline std::vector<Sequent> ruleset_candidates(const std::vector<Type>& types, RuleMode mode) {
  std::unordered_map<std::string, std::vector<std::size_t>> by_word;
  std::vector<GroupWord> words;
  for (std::size_t i = 0; i < types.size(); ++i) {
    words.push_back(interpret_plain(types[i]));
    by_word[str(words.back())].push_back(i);
  }
  std::vector<Sequent> out;
  auto emit = [&](const std::vector<std::size_t>& ante, const GroupWord& w) {
    auto it = by_word.find(str(w));
    if (it == by_word.end()) return;
    Hedge h;
    for (std::size_t i : ante) h.push_back(Tree::leaf(types[i]));
    for (std::size_t j : it->second) out.push_back(Sequent{h, types[j]});
  };
  if (mode == RuleMode::Guarded) emit({}, GroupWord{});
  for (std::size_t a = 0; a < types.size(); ++a) emit({a}, words[a]);
  for (std::size_t a = 0; a < types.size(); ++a)
    for (std::size_t b = 0; b < types.size(); ++b) emit({a, b}, mul(words[a], words[b]));
  return out;
}

namespace detail {

inline std::string ruleset_header(const std::set<std::string>& prims, int m, Calculus c) {
  std::string b;
  for (const auto& p : prims) b += (b.empty() ? "" : ",") + p;
  return "# B=" + b + " m=" + std::to_string(m) + " calculus=" + name(c) + " version=" + kToolVersion;
}

inline std::filesystem::path ruleset_cache_path(const std::string& dir, const std::set<std::string>& prims, int m,
                                                Calculus c) {
  std::string b;
  for (const auto& p : prims) b += (b.empty() ? "" : "_") + p;
  return std::filesystem::path(dir) / ("rules-" + std::string(name(c)) + "-m" + std::to_string(m) + "-" + b + ".txt");
}

inline std::vector<char> prove_all(const std::vector<Sequent>& cands, Calculus c, const RuleSetOptions& opt) {
  std::vector<char> ok(cands.size(), 0);
  unsigned n = std::max(1u, opt.threads);
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto work = [&] {
    Prover pr(c, opt.timeout_ms);
    for (;;) {
      std::size_t i = next++;
      if (i >= cands.size()) return;
      try {
        ok[i] = pr.provable(cands[i]) ? 1 : 0;
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!err) err = std::current_exception();
        next = cands.size();
        return;
      }
      if (pr.memo_size() > 2000000) pr.clear();
    }
  };
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  return ok;
}

}  // namespace detail

/// Builds S and T (or S' and T' for L1starDia) over the primitives `prims`
/// with length bound m.
inline RuleSets build_rulesets(const std::set<std::string>& prims, int m, Calculus calc,
                               const RuleSetOptions& opt = {}) {
  if (calc != Calculus::Ldia && calc != Calculus::L1starDia)
    throw std::invalid_argument("rule sets are built for Ldia or L1starDia");
  RuleSets r;
  r.mode = calc == Calculus::L1starDia ? RuleMode::Guarded : RuleMode::Plain;
  r.prims = prims;
  r.m = m;
  r.calculus = calc;
  r.types = enum_types(prims, m, r.mode == RuleMode::Guarded);
  const std::string header = detail::ruleset_header(prims, m, calc);

  bool loaded = false;
  std::filesystem::path cache;
  if (!opt.cache_dir.empty()) {
    cache = detail::ruleset_cache_path(opt.cache_dir, prims, m, calc);
    std::ifstream in(cache);
    std::string line;
    if (in && std::getline(in, line) && line == header) {
      while (std::getline(in, line))
        if (!line.empty()) r.S.push_back(parse_sequent(line));
      loaded = true;
      r.from_cache = true;
    }
  }
  if (!loaded) {
    std::vector<Sequent> cands = ruleset_candidates(r.types, r.mode);
    std::vector<char> ok = detail::prove_all(cands, calc, opt);
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (ok[i]) r.S.push_back(std::move(cands[i]));
    if (!cache.empty()) {
      std::filesystem::create_directories(opt.cache_dir);
      std::ofstream out(cache);
      out << header << '\n';
      for (const Sequent& s : r.S) out << str(s) << '\n';
    }
  }
  r.T = r.S;
  for (Sequent& b : bracket_bridges(r.types, m, r.mode)) r.T.push_back(std::move(b));
  r.index();
  return r;
}

}  // namespace lambek

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lambek/harness.hpp"

#ifndef LAMBEK_DATA_DIR
#define LAMBEK_DATA_DIR "data"
#endif

using namespace lambek;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string calculus = "Ldia";
  std::size_t max_len = 5;
  std::uint64_t seed = 1;
  long timeout_ms = 0;
  std::string cache_dir;
  bool json = false;
  std::string out;
};

Calculus calc_of(const Flags& f) {
  auto c = calculus_from_name(f.calculus);
  if (!c) throw UsageError("unknown calculus '" + f.calculus + "'");
  return *c;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(f.out);
    if (!o) throw std::runtime_error("cannot write " + f.out);
    o << text;
  }
}

std::vector<std::string> words_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// recovers principal positions, so thin and interpolate accept checked text
Proof load_proof(const std::string& path, Calculus c) {
  Proof p = parse_proof(slurp(path));
  std::string why;
  auto a = annotate(p, c, &why);
  if (!a) throw std::runtime_error("proof does not check in " + std::string(name(c)) + ": " + why);
  return *a;
}

json proof_json(const Proof& p) {
  json j;
  j["rule"] = name(p.rule);
  j["conclusion"] = str(p.conclusion);
  j["premises"] = json::array();
  for (const Proof& q : p.premises) j["premises"].push_back(proof_json(q));
  return j;
}

std::vector<Sequent> load_base(const std::string& path) {
  std::vector<Sequent> out;
  std::istringstream in(slurp(path));
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    out.push_back(parse_sequent(line));
  }
  return out;
}

int cmd_prove(const Flags& f, const std::string& text) {
  Sequent s = parse_sequent(text);
  Calculus c = calc_of(f);
  auto p = prove(s, c, f.timeout_ms);
  if (f.json) {
    json j{{"sequent", str(s)}, {"calculus", name(c)}, {"provable", p.has_value()}};
    if (p) j["proof"] = proof_json(*p);
    emit(f, j.dump(2) + "\n");
  } else {
    emit(f, p ? proof_text(*p) : "UNPROVABLE\n");
  }
  return 0;
}

int cmd_check(const Flags& f, const std::string& path) {
  Calculus c = calc_of(f);
  std::string why;
  bool ok = check(parse_proof(slurp(path)), c, &why);
  if (f.json) emit(f, json{{"valid", ok}, {"calculus", name(c)}, {"reason", why}}.dump(2) + "\n");
  else emit(f, ok ? "VALID\n" : "INVALID: " + why + "\n");
  return ok ? 0 : 1;
}

int cmd_interpolate(const Flags& f, const std::string& text, const std::string& ctx_text) {
  Calculus c = calc_of(f);
  Sequent s = parse_sequent(text);
  Hedge ctx = parse_context(ctx_text);
  Span hole = hole_span(ctx);
  const Hedge& level = hedge_at(s.antecedent, hole.path);
  const std::size_t ctx_size = hedge_at(ctx, hole.path).size();
  if (level.size() + 1 < ctx_size) throw UsageError("context does not fit the antecedent");
  Span sel{hole.path, hole.begin, hole.begin + level.size() + 1 - ctx_size};
  if (plug(ctx, slice(s.antecedent, sel)) != s.antecedent) throw UsageError("context does not fit the antecedent");
  auto p = prove(s, c, f.timeout_ms);
  if (!p) {
    emit(f, f.json ? json{{"sequent", str(s)}, {"provable", false}}.dump(2) + "\n" : "UNPROVABLE\n");
    return 0;
  }
  InterpolationResult r = extract_interpolant(*p, sel, c);
  InterpolationCheck chk = verify_interpolant(s, sel, r, c);
  json j{{"sequent", str(s)},
         {"context", str(ctx)},
         {"selected", str(slice(s.antecedent, sel))},
         {"interpolant", r.interpolant.str()},
         {"left", str(r.left_proof.conclusion)},
         {"right", str(r.right_proof.conclusion)},
         {"checks", {{"left", chk.left_ok}, {"right", chk.right_ok}, {"sigma", chk.sigma_ok}, {"tau", chk.tau_ok}}}};
  emit(f, j.dump(2) + "\n");
  return chk.all() ? 0 : 1;
}

int cmd_thin(const Flags& f, const std::string& path) {
  Calculus c = calc_of(f);
  ThinResult t = thin_index(load_proof(path, c), c);
  if (f.json) {
    emit(f, json{{"calculus", name(t.calculus)},
                 {"conclusion", str(t.proof.conclusion)},
                 {"theta", t.theta},
                 {"proof", proof_json(t.proof)}}
                    .dump(2) +
                "\n");
  } else {
    std::string out = proof_text(t.proof) + "theta:";
    for (const auto& [k, v] : t.theta) out += " " + k + "->" + v;
    emit(f, out + "\n");
  }
  return 0;
}

int cmd_interpret(const Flags& f, const std::string& text) {
  GroupWord w;
  std::set<int> idx;
  if (text.find("=>") != std::string::npos) {
    Sequent s = parse_sequent(text);
    collect_indices(s, idx);
    bool plain = idx.empty() || idx == std::set<int>{0};
    GroupWord a = plain ? interpret_plain(s.antecedent) : interpret(s.antecedent);
    GroupWord b = plain ? interpret_plain(s.succedent) : interpret(s.succedent);
    emit(f, f.json ? json{{"antecedent", str(a)}, {"succedent", str(b)}, {"equal", a == b}}.dump(2) + "\n"
                   : str(a) + " | " + str(b) + "\n");
    return 0;
  }
  Hedge h = parse_hedge(text);
  collect_indices(h, idx);
  w = idx.empty() || idx == std::set<int>{0} ? interpret_plain(h) : interpret(h);
  emit(f, f.json ? json{{"input", text}, {"word", str(w)}, {"length", wlen(w)}}.dump(2) + "\n" : str(w) + "\n");
  return 0;
}

int cmd_translate(const Flags& f, const std::string& text) {
  Type t = translate_flat(parse_type(text));
  emit(f, f.json ? json{{"input", text}, {"flat", t.str()}}.dump(2) + "\n" : t.str() + "\n");
  return 0;
}

CompileOptions compile_options(const Flags& f, int m) {
  CompileOptions co;
  co.rules.timeout_ms = f.timeout_ms;
  co.rules.cache_dir = f.cache_dir;
  co.m_override = m;
  return co;
}

int cmd_compile(const Flags& f, const std::string& path, int m) {
  Grammar g = load_grammar(path);
  Compiled c = compile_grammar(g, calc_of(f), compile_options(f, m));
  emit(f, cfg_text(c.cfg));
  std::cerr << c.cfg.nonterminals.size() << " nonterminals, " << c.cfg.productions.size() << " productions\n";
  return 0;
}

int cmd_parse(const Flags& f, const std::string& path, const std::string& input) {
  Cfg g = parse_cfg(slurp(path));
  auto w = words_of(input);
  auto t = derives(g, g.start, w);
  if (!t) {
    emit(f, "NO\n");
    return 0;
  }
  std::ostringstream out;
  print_cfg_tree(g, *t, out);
  emit(f, out.str());
  return 0;
}

int cmd_cut_derive(const Flags& f, const std::string& base_path, const std::string& text) {
  auto d = cut_derives(load_base(base_path), parse_sequent(text));
  emit(f, d ? cut_derivation_text(*d) : "NO\n");
  return 0;
}

int cmd_compare(const Flags& f, const std::string& path, int m) {
  Grammar g = load_grammar(path);
  Calculus c = calc_of(f);
  Compiled comp = compile_grammar(g, c, compile_options(f, m));
  Prover prover(c, f.timeout_ms);
  std::size_t checked = 0, members = 0;
  for (const auto& w : strings_upto(g.alphabet, f.max_len)) {
    ++checked;
    Recognition r = recognize(g, w, c, prover);
    bool in_cfg = derives(comp.cfg, comp.cfg.start, w).has_value();
    members += r.member;
    if (r.member != in_cfg) {
      std::string s;
      for (const auto& a : w) s += (s.empty() ? "" : " ") + a;
      emit(f, "DIFFERENT on \"" + s + "\": grammar " + (r.member ? "accepts" : "rejects") + ", CFG " +
                  (in_cfg ? "accepts" : "rejects") + "\n");
      return 1;
    }
    if (r.over_budget) {
      emit(f, "BRACKET BOUND EXCEEDED by " + str(*r.over_budget) + "\n");
      return 1;
    }
  }
  emit(f, "EQUIVALENT up to " + std::to_string(f.max_len) + " (" + std::to_string(checked) + " strings, " +
              std::to_string(members) + " members)\n");
  return 0;
}

int cmd_report(const Flags& f, const std::string& data_dir, const std::vector<int>& only) {
  HarnessOptions opt;
  opt.seed = f.seed;
  if (f.timeout_ms > 0) opt.timeout_ms = f.timeout_ms;
  opt.data_dir = data_dir;
  opt.out_dir = f.out.empty() ? "report" : f.out;
  opt.cache_dir = f.cache_dir.empty() ? (std::filesystem::path(opt.out_dir) / "cache").string() : f.cache_dir;
  bool all = true;
  auto rs = run_harness(opt, std::set<int>(only.begin(), only.end()), [&](const Report& r) {
    all &= r.pass;
    if (!f.json) std::cout << report_line(r) << std::endl;
  });
  write_reports(rs, opt.out_dir);
  if (f.json) {
    json arr = json::array();
    for (const Report& r : rs) arr.push_back(report_json(r));
    std::cout << arr.dump(2) << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambek calculus with brackets: prover, interpolation and grammar compiler"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--calculus", f.calculus, "Ldia, LdiaM, LstarDia, LstarDiaM, L1starDia, L1starDiaM, L, Lstar, L1star")
      ->capture_default_str();
  app.add_option("--max-len,--maxlen", f.max_len, "longest string for compare")->capture_default_str();
  app.add_option("--seed", f.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--timeout-ms", f.timeout_ms, "prover time limit per query, 0 for none")->capture_default_str();
  app.add_option("--cache-dir", f.cache_dir, "directory for rule-set caches");
  app.add_flag("--json", f.json, "JSON output");
  app.add_option("-o,--out", f.out, "output file (report: directory)");
  app.fallthrough();

  std::string a1, a2;
  int m = 0;
  std::vector<int> only;
  std::string data_dir = LAMBEK_DATA_DIR;

  auto* prove_c = app.add_subcommand("prove", "prove a sequent or print UNPROVABLE");
  prove_c->add_option("sequent", a1)->required();
  auto* check_c = app.add_subcommand("check", "check a proof file ('-' for stdin)");
  check_c->add_option("proof", a1)->required();
  auto* interp_c = app.add_subcommand("interpolate", "interpolant for a partition given by a context with '_'");
  interp_c->add_option("sequent", a1)->required();
  interp_c->add_option("context", a2)->required();
  auto* thin_c = app.add_subcommand("thin", "thin-index a proof file");
  thin_c->add_option("proof", a1)->required();
  auto* interpret_c = app.add_subcommand("interpret", "free-group image of a type, hedge or sequent");
  interpret_c->add_option("text", a1)->required();
  auto* flat_c = app.add_subcommand("translate-flat", "bracket-free translation of a type");
  flat_c->add_option("type", a1)->required();
  auto* compile_c = app.add_subcommand("compile", "compile a grammar file to a CFG");
  compile_c->add_option("grammar", a1)->required();
  compile_c->add_option("--m", m, "override the length bound");
  auto* parse_c = app.add_subcommand("parse", "parse a string with a CFG file");
  parse_c->add_option("cfg", a1)->required();
  parse_c->add_option("string", a2, "space-separated terminals; empty for the empty string");
  auto* cut_c = app.add_subcommand("cut-derive", "derive a sequent by Cut from a file of sequents");
  cut_c->add_option("base", a1)->required();
  cut_c->add_option("sequent", a2)->required();
  auto* compare_c = app.add_subcommand("compare", "compare a grammar with its compiled CFG");
  compare_c->add_option("grammar", a1)->required();
  compare_c->add_option("--m", m, "override the length bound");
  auto* report_c = app.add_subcommand("report", "run every acceptance check");
  report_c->add_option("--only", only, "criteria to run");
  report_c->add_option("--data", data_dir, "grammar directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*prove_c) return cmd_prove(f, a1);
    if (*check_c) return cmd_check(f, a1);
    if (*interp_c) return cmd_interpolate(f, a1, a2);
    if (*thin_c) return cmd_thin(f, a1);
    if (*interpret_c) return cmd_interpret(f, a1);
    if (*flat_c) return cmd_translate(f, a1);
    if (*compile_c) return cmd_compile(f, a1, m);
    if (*parse_c) return cmd_parse(f, a1, a2);
    if (*cut_c) return cmd_cut_derive(f, a1, a2);
    if (*compare_c) return cmd_compare(f, a1, m);
    if (*report_c) return cmd_report(f, data_dir, only);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Timeout& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parse.hpp"

namespace lambek {

struct Grammar {
  std::set<std::string> alphabet;
  std::vector<std::pair<std::string, Type>> lexicon;
  Type distinguished;

  std::vector<Type> types_of(const std::string& a) const {
    std::vector<Type> out;
    for (const auto& [w, t] : lexicon)
      if (w == a) out.push_back(t);
    return out;
  }

  std::set<std::string> primitives() const {
    std::set<std::string> out;
    for (const auto& entry : lexicon) collect_primitives(entry.second, out);
    collect_primitives(distinguished, out);
    return out;
  }

  /// max of ||A|| over the lexicon and the distinguished type.
  int bound() const {
    int m = distinguished.length();
    for (const auto& entry : lexicon) m = std::max(m, entry.second.length());
    return m;
  }
};

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline Grammar parse_grammar(const std::string& text) {
  Grammar g;
  bool have_target = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("grammar line " + std::to_string(lineno) + ": " + msg);
    };
    if (colon == std::string::npos) fail("missing ':'");
    std::string head = trim(line.substr(0, colon));
    std::string body = trim(line.substr(colon + 1));
    Type t;
    try {
      t = parse_type(body);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (head == "target") {
      if (have_target) fail("duplicate target");
      g.distinguished = t;
      have_target = true;
    } else if (head.rfind("lexicon", 0) == 0) {
      std::string word = trim(head.substr(7));
      if (word.empty() || word.find_first_of(" \t") != std::string::npos) fail("bad terminal");
      g.alphabet.insert(word);
      g.lexicon.emplace_back(word, t);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!have_target) throw std::runtime_error("grammar has no target");
  std::set<int> idx;
  for (const auto& entry : g.lexicon) collect_indices(entry.second, idx);
  collect_indices(g.distinguished, idx);
  for (int i : idx)
    if (i != 0) throw std::runtime_error("grammar types must not be indexed");
  return g;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Grammar load_grammar(const std::string& path) { return parse_grammar(read_file(path)); }

}  // namespace lambek

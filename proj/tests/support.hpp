#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Test-side referees.  Everything here is recomputed from the definitions on
// plain strings and shares no code with the library, so a bug would have to
// appear identically on both sides to slip through.

namespace testref {

inline int ones_in(const std::string& s, std::size_t from, std::size_t len) {
  int c = 0;
  for (std::size_t i = from; i < from + len; ++i) c += s[i] == '1';
  return c;
}

// P[k] / F[k] for k = 0..n, factor-by-factor.
inline std::pair<std::vector<int>, std::vector<int>> profile(const std::string& s) {
  const std::size_t n = s.size();
  std::vector<int> P(n + 1, 0), F(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    P[k] = ones_in(s, 0, k);
    for (std::size_t start = 0; start + k <= n; ++start)
      F[k] = std::max(F[k], ones_in(s, start, k));
  }
  return {P, F};
}

// Equivalent formulation of prefix normality: the prefix is always a
// maximizing factor, i.e. P == F.
inline bool pn(const std::string& s) {
  auto [P, F] = profile(s);
  return P == F;
}

inline std::string word_of(std::uint64_t m, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((m >> (n - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

// All prefix normal words of length n, ascending.
inline std::vector<std::string> all_pn_words(int n) {
  std::vector<std::string> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::string s = word_of(m, n);
    if (pn(s)) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::string> chain_words(const std::vector<int>& g) {
  std::string cur(g.size(), '1');
  std::vector<std::string> out{cur};
  for (int v : g) {
    cur[static_cast<std::size_t>(v - 1)] = '0';
    out.push_back(cur);
  }
  return out;
}

inline bool pn_generator(const std::vector<int>& g) {
  for (const std::string& w : chain_words(g))
    if (!pn(w)) return false;
  return true;
}

// All prefix normal generators of length n, ascending.
inline std::vector<std::vector<int>> all_pn_generators(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (pn_generator(v)) out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---- minimal DOT reader ----
//
// Accepts the digraph subset this project emits (and plain graphviz would):
// quoted/bare identifiers, attribute lists, rank subgraphs and edges.
// Collects node ids and edge pairs; throws std::runtime_error on anything
// outside the grammar.

struct DotGraph {
  std::vector<std::string> nodes;  // first-mention order, deduplicated
  std::vector<std::pair<std::string, std::string>> edges;
};

namespace dot_detail {

struct Token {
  enum Kind { id, punct, end } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) return {Token::end, ""};
    const char c = s_[i_];
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ';' || c == '=' || c == ',') {
      ++i_;
      return {Token::punct, std::string(1, c)};
    }
    if (c == '-') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
        i_ += 2;
        return {Token::punct, "->"};
      }
      throw std::runtime_error("dot: stray '-'");
    }
    if (c == '"') {
      std::string out;
      ++i_;
      while (i_ < s_.size() && s_[i_] != '"') {
        if (s_[i_] == '\\') throw std::runtime_error("dot: escapes not supported");
        out.push_back(s_[i_++]);
      }
      if (i_ >= s_.size()) throw std::runtime_error("dot: unterminated string");
      ++i_;
      return {Token::id, out};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
      std::string out;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                                s_[i_] == '_' || s_[i_] == '.'))
        out.push_back(s_[i_++]);
      return {Token::id, out};
    }
    throw std::runtime_error(std::string("dot: unexpected character '") + c + "'");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  DotGraph parse() {
    expect_id("digraph");
    if (tok_.kind == Token::id) advance();  // optional graph name
    expect_punct("{");
    while (!(tok_.kind == Token::punct && tok_.text == "}")) statement();
    advance();
    if (tok_.kind != Token::end) throw std::runtime_error("dot: trailing input");
    return std::move(g_);
  }

 private:
  void advance() { tok_ = lex_.next(); }

  void expect_punct(const std::string& p) {
    if (tok_.kind != Token::punct || tok_.text != p)
      throw std::runtime_error("dot: expected '" + p + "', got '" + tok_.text + "'");
    advance();
  }

  void expect_id(const std::string& id) {
    if (tok_.kind != Token::id || tok_.text != id)
      throw std::runtime_error("dot: expected '" + id + "', got '" + tok_.text + "'");
    advance();
  }

  std::string take_id() {
    if (tok_.kind != Token::id)
      throw std::runtime_error("dot: expected identifier, got '" + tok_.text + "'");
    std::string out = tok_.text;
    advance();
    return out;
  }

  void add_node(const std::string& id) {
    if (std::find(g_.nodes.begin(), g_.nodes.end(), id) == g_.nodes.end())
      g_.nodes.push_back(id);
  }

  void attr_list() {
    expect_punct("[");
    while (!(tok_.kind == Token::punct && tok_.text == "]")) {
      take_id();
      expect_punct("=");
      take_id();
      if (tok_.kind == Token::punct && (tok_.text == "," || tok_.text == ";")) advance();
    }
    advance();
  }

  void statement() {
    if (tok_.kind == Token::punct && tok_.text == "{") {  // subgraph
      advance();
      while (!(tok_.kind == Token::punct && tok_.text == "}")) statement();
      advance();
      if (tok_.kind == Token::punct && tok_.text == ";") advance();
      return;
    }
    const std::string first = take_id();
    if (tok_.kind == Token::punct && tok_.text == "=") {  // graph attribute
      advance();
      take_id();
      expect_punct(";");
      return;
    }
    if (tok_.kind == Token::punct && tok_.text == "->") {  // edge
      advance();
      const std::string second = take_id();
      add_node(first);
      add_node(second);
      g_.edges.emplace_back(first, second);
      if (tok_.kind == Token::punct && tok_.text == "[") attr_list();
      expect_punct(";");
      return;
    }
    if (tok_.kind == Token::punct && tok_.text == "[") {  // node stmt / defaults
      attr_list();
      if (first != "node" && first != "edge" && first != "graph") add_node(first);
      expect_punct(";");
      return;
    }
    add_node(first);  // bare node
    expect_punct(";");
  }

  Lexer lex_;
  Token tok_{Token::end, ""};
  DotGraph g_;
};

}  // namespace dot_detail

inline DotGraph parse_dot(const std::string& text) {
  return dot_detail::Parser(text).parse();
}

}  // namespace testref

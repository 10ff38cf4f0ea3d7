#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnchain/word.hpp"

// Generators (permutations of [n]) and the word chains they induce:
//   c[1] = 1^n,  c[i+1] = flip(c[i], g(i)),  c[n+1] = 0^n.
// A generator is prefix normal when every word of its chain is.

namespace pnchain {

class Generator {
 public:
  // Validates a permutation of [n], n >= 1.
  static Generator make(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw std::invalid_argument("Generator: empty sequence");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values) {
      if (v < 1 || v > n)
        throw std::invalid_argument("Generator: value " + std::to_string(v) +
                                    " outside [1," + std::to_string(n) + "]");
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Generator: duplicate value " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
    }
    return Generator(std::move(values));
  }

  // Comma-separated decimals, e.g. "6,5,3,2,4,1".  Spaces around entries ok.
  static Generator parse(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
      while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
      if (tok.empty()) throw std::invalid_argument("Generator::parse: empty entry");
      int value = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw std::invalid_argument("Generator::parse: bad entry '" + std::string(tok) + "'");
        value = value * 10 + (c - '0');
        if (value > 1000000) throw std::invalid_argument("Generator::parse: entry too large");
      }
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return make(std::move(values));
  }

  int size() const { return static_cast<int>(values_.size()); }

  // 1-based: g(i) is the position flipped at chain step i.
  int at(int i) const {
    if (i < 1 || i > size())
      throw std::out_of_range("Generator: index " + std::to_string(i) + " outside [1," +
                              std::to_string(size()) + "]");
    return values_[static_cast<std::size_t>(i - 1)];
  }

  const std::vector<int>& values() const { return values_; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(values_[i]);
    }
    return s;
  }

  friend bool operator==(const Generator& a, const Generator& b) = default;
  friend auto operator<=>(const Generator& a, const Generator& b) {
    return a.values_ <=> b.values_;
  }

 private:
  explicit Generator(std::vector<int> values) : values_(std::move(values)) {}
  std::vector<int> values_;
};

struct WordChain {
  std::vector<BinaryWord> words;  // stored 0-based; word(i) below is 1-based

  int n() const { return static_cast<int>(words.size()) - 1; }

  // i in [1, n+1]; word(1) = 1^n, word(n+1) = 0^n.
  const BinaryWord& word(int i) const {
    if (i < 1 || i > static_cast<int>(words.size()))
      throw std::out_of_range("WordChain: index " + std::to_string(i) + " outside [1," +
                              std::to_string(words.size()) + "]");
    return words[static_cast<std::size_t>(i - 1)];
  }
};

// Full chain of g: n+1 words, the i-th zero appearing at position g(i).
inline WordChain chain(const Generator& g) {
  const int n = g.size();
  WordChain c;
  c.words.reserve(static_cast<std::size_t>(n) + 1);
  std::vector<Bit> cur(static_cast<std::size_t>(n), 1);
  c.words.push_back(BinaryWord(cur));
  for (int i = 1; i <= n; ++i) {
    cur[static_cast<std::size_t>(g.at(i) - 1)] = 0;  // permutation => still a 1 here
    c.words.push_back(BinaryWord(cur));
  }
  return c;
}

struct ChainFailure {
  int index;        // 1-based chain index of the first non-prefix-normal word
  BinaryWord word;  // that word
};

// First chain word that breaks prefix normality, building lazily so a failure
// at step i never computes the rest of the chain.
inline std::optional<ChainFailure> first_non_pn_chain_word(const Generator& g) {
  const int n = g.size();
  std::vector<Bit> cur(static_cast<std::size_t>(n), 1);
  // index 1 is 1^n, always prefix normal
  for (int i = 1; i <= n; ++i) {
    cur[static_cast<std::size_t>(g.at(i) - 1)] = 0;
    if (!is_prefix_normal(cur)) return ChainFailure{i + 1, BinaryWord(cur)};
  }
  return std::nullopt;
}

inline bool is_pn_generator(const Generator& g) {
  return !first_non_pn_chain_word(g).has_value();
}

// Two properties every prefix normal generator must satisfy (necessary, not
// sufficient): the position-1 bit is cleared last, and the first cleared
// position lies in the right half, g(1) >= ceil((n+1)/2).
struct NecessaryConditions {
  bool last_is_one;
  bool first_flip_late_enough;

  bool all() const { return last_is_one && first_flip_late_enough; }
  friend bool operator==(const NecessaryConditions&, const NecessaryConditions&) = default;
};

inline NecessaryConditions necessary_conditions(const Generator& g) {
  const int n = g.size();
  return NecessaryConditions{g.at(n) == 1, g.at(1) >= (n + 2) / 2};
}

inline int inversions(const Generator& g) {
  const auto& v = g.values();
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

enum class Parity { even, odd };

inline Parity parity(const Generator& g) {
  return inversions(g) % 2 == 0 ? Parity::even : Parity::odd;
}

// (g1 . g2)(i) = g1(g2(i)); lengths must match.
inline Generator compose(const Generator& g1, const Generator& g2) {
  if (g1.size() != g2.size())
    throw std::invalid_argument("compose: length mismatch " + std::to_string(g1.size()) +
                                " vs " + std::to_string(g2.size()));
  std::vector<int> out(static_cast<std::size_t>(g1.size()));
  for (int i = 1; i <= g1.size(); ++i)
    out[static_cast<std::size_t>(i - 1)] = g1.at(g2.at(i));
  return Generator::make(std::move(out));
}

// Exchange entries j and j+1, 1 <= j <= n-1.
inline Generator swap_adjacent(const Generator& g, int j) {
  if (j < 1 || j > g.size() - 1)
    throw std::out_of_range("swap_adjacent: j = " + std::to_string(j) + " outside [1," +
                            std::to_string(g.size() - 1) + "]");
  std::vector<int> v = g.values();
  std::swap(v[static_cast<std::size_t>(j - 1)], v[static_cast<std::size_t>(j)]);
  return Generator::make(std::move(v));
}

// Insert the new maximum value n+1 at 1-based position pos of a length-n
// generator, producing a length-(n+1) generator.
inline Generator insert_new_max(const Generator& g, int pos) {
  const int n = g.size();
  if (pos < 1 || pos > n + 1)
    throw std::out_of_range("insert_new_max: pos = " + std::to_string(pos) +
                            " outside [1," + std::to_string(n + 1) + "]");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n) + 1);
  const auto& src = g.values();
  v.insert(v.end(), src.begin(), src.begin() + (pos - 1));
  v.push_back(n + 1);
  v.insert(v.end(), src.begin() + (pos - 1), src.end());
  return Generator::make(std::move(v));
}

}  // namespace pnchain

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Binary words over {0,1} and the prefix-normal predicate.
//
// A word w is prefix normal iff for every k, no length-k factor of w contains
// more 1s than the length-k prefix of w.  Positions are 1-based throughout;
// serialization is plain ASCII '0'/'1', leftmost character = position 1.

namespace pnchain {

using Bit = std::uint8_t;

class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::vector<Bit> bits) : bits_(std::move(bits)) {
    for (Bit b : bits_)
      if (b > 1) throw std::invalid_argument("BinaryWord: bits must be 0 or 1");
  }

  static BinaryWord zeros(int n) {
    require_length(n);
    return BinaryWord(std::vector<Bit>(static_cast<std::size_t>(n), 0));
  }

  static BinaryWord ones(int n) {
    require_length(n);
    return BinaryWord(std::vector<Bit>(static_cast<std::size_t>(n), 1));
  }

  static BinaryWord parse(std::string_view text) {
    std::vector<Bit> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("BinaryWord::parse: expected only '0'/'1', got '" +
                                    std::string(1, c) + "'");
      bits.push_back(static_cast<Bit>(c == '1'));
    }
    return BinaryWord(std::move(bits));
  }

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }

  // 1-based access, pos in [1, size()].
  Bit at(int pos) const {
    check_position(pos);
    return bits_[static_cast<std::size_t>(pos - 1)];
  }

  int ones_count() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), Bit{1}));
  }
  int zeros_count() const { return size() - ones_count(); }

  std::span<const Bit> bits() const { return bits_; }

  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (Bit b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  BinaryWord appended(Bit b) const {
    std::vector<Bit> v = bits_;
    v.push_back(b);
    return BinaryWord(std::move(v));
  }

  BinaryWord prepended(Bit b) const {
    std::vector<Bit> v;
    v.reserve(bits_.size() + 1);
    v.push_back(b);
    v.insert(v.end(), bits_.begin(), bits_.end());
    return BinaryWord(std::move(v));
  }

  BinaryWord with_flip(int pos) const;  // defined below, needs flip()

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) {
    return a.bits_ <=> b.bits_;  // '0' < '1' lexicographic, same as string order
  }

 private:
  static void require_length(int n) {
    if (n < 0) throw std::invalid_argument("BinaryWord: negative length");
  }
  void check_position(int pos) const {
    if (pos < 1 || pos > size())
      throw std::out_of_range("BinaryWord: position " + std::to_string(pos) +
                              " outside [1," + std::to_string(size()) + "]");
  }

  std::vector<Bit> bits_;
};

// prefix_ones(w)[k] = number of 1s in the length-k prefix, k = 0..n.
inline std::vector<int> prefix_ones(std::span<const Bit> bits) {
  std::vector<int> pre(bits.size() + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) pre[i + 1] = pre[i] + bits[i];
  return pre;
}

struct OnesProfile {
  std::vector<int> prefix_ones;      // P(k), index k = 0..n
  std::vector<int> max_factor_ones;  // F(k) = max 1s over all length-k factors
};

// O(n^2): one sliding-window pass per factor length.  Fast enough for the
// word lengths this library targets; swappable for something smarter if a
// caller ever needs long words.
inline OnesProfile ones_profile(std::span<const Bit> bits) {
  const int n = static_cast<int>(bits.size());
  OnesProfile prof;
  prof.prefix_ones = prefix_ones(bits);
  prof.max_factor_ones.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::vector<int>& pre = prof.prefix_ones;
  for (int k = 1; k <= n; ++k) {
    int best = pre[static_cast<std::size_t>(k)];
    for (int s = 1; s + k <= n; ++s) {
      const int w = pre[static_cast<std::size_t>(s + k)] - pre[static_cast<std::size_t>(s)];
      if (w > best) best = w;
    }
    prof.max_factor_ones[static_cast<std::size_t>(k)] = best;
  }
  return prof;
}

inline OnesProfile ones_profile(const BinaryWord& w) { return ones_profile(w.bits()); }

// Production predicate: early-exits at the first window that beats its
// prefix.  Empty word is prefix normal by convention.
inline bool is_prefix_normal(std::span<const Bit> bits) {
  const int n = static_cast<int>(bits.size());
  std::vector<int> pre = prefix_ones(bits);
  for (int k = 1; k <= n; ++k) {
    const int p = pre[static_cast<std::size_t>(k)];
    for (int s = 1; s + k <= n; ++s) {
      if (pre[static_cast<std::size_t>(s + k)] - pre[static_cast<std::size_t>(s)] > p)
        return false;
    }
  }
  return true;
}

inline bool is_prefix_normal(const BinaryWord& w) { return is_prefix_normal(w.bits()); }

// Definition-literal check: enumerate every factor and count its 1s from
// scratch.  Deliberately shares no machinery with is_prefix_normal; kept as
// the cross-check oracle.
inline bool is_prefix_normal_oracle(std::span<const Bit> bits) {
  const int n = static_cast<int>(bits.size());
  for (int len = 1; len <= n; ++len) {
    int prefix = 0;
    for (int i = 0; i < len; ++i) prefix += bits[static_cast<std::size_t>(i)];
    for (int start = 0; start + len <= n; ++start) {
      int w = 0;
      for (int i = start; i < start + len; ++i) w += bits[static_cast<std::size_t>(i)];
      if (w > prefix) return false;
    }
  }
  return true;
}

inline bool is_prefix_normal_oracle(const BinaryWord& w) {
  return is_prefix_normal_oracle(w.bits());
}

// Flip the 1 at 1-based position pos to 0.  Throws if pos is out of range or
// does not hold a 1 (flips only ever retire 1s in this library).
inline BinaryWord flip(const BinaryWord& w, int pos) {
  if (pos < 1 || pos > w.size())
    throw std::out_of_range("flip: position " + std::to_string(pos) + " outside [1," +
                            std::to_string(w.size()) + "]");
  if (w.at(pos) != 1)
    throw std::invalid_argument("flip: position " + std::to_string(pos) +
                                " does not hold a 1");
  std::vector<Bit> bits(w.bits().begin(), w.bits().end());
  bits[static_cast<std::size_t>(pos - 1)] = 0;
  return BinaryWord(std::move(bits));
}

inline BinaryWord BinaryWord::with_flip(int pos) const { return flip(*this, pos); }

inline bool is_palindrome(const BinaryWord& w) {
  auto b = w.bits();
  return std::equal(b.begin(), b.begin() + w.size() / 2, b.rbegin());
}

// All prefix normal words obtained from w by turning a single 0 into a 1.
// Flipping a later 0 yields a smaller word, so scanning positions right to
// left returns the parents in ascending word order.
inline std::vector<BinaryWord> pn_parents(const BinaryWord& w) {
  std::vector<BinaryWord> out;
  std::vector<Bit> bits(w.bits().begin(), w.bits().end());
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] == 0) {
      bits[i] = 1;
      if (is_prefix_normal(bits)) out.push_back(BinaryWord(bits));
      bits[i] = 0;
    }
  }
  return out;
}

}  // namespace pnchain

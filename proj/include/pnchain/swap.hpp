#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnchain/chain.hpp"
#include "pnchain/word.hpp"

// Decides whether exchanging adjacent generator entries j, j+1 preserves the
// prefix normal property, without rebuilding the whole swapped chain.
//
// Only one chain word changes under the swap (index j+1), so the decision
// reduces to scanning factor windows of the pivot word (chain index j, the
// last word both chains share).  With a = g(j), b = g(j+1), a > b, the swap
// breaks prefix normality iff some window through a but not b, with length in
// [b, a), already carries at least as many 1s as the same-length prefix.

namespace pnchain {

struct FactorWindow {
  int start;   // 1-based position of the window's first character
  int length;  // window covers [start, start+length-1]

  friend bool operator==(const FactorWindow&, const FactorWindow&) = default;
};

// All windows in a length-n word that contain position include_pos, avoid
// position exclude_pos, and have length in [exclude_pos, include_pos).
// Ordered by length ascending, then start ascending (the tie-break order the
// violating-factor search relies on).  Requires 1 <= exclude_pos <
// include_pos <= n.
inline std::vector<FactorWindow> candidate_windows(int n, int include_pos, int exclude_pos) {
  if (exclude_pos < 1 || include_pos <= exclude_pos || include_pos > n)
    throw std::invalid_argument("candidate_windows: need 1 <= exclude_pos < include_pos <= n, got n=" +
                                std::to_string(n) + " include=" + std::to_string(include_pos) +
                                " exclude=" + std::to_string(exclude_pos));
  std::vector<FactorWindow> out;
  for (int len = exclude_pos; len < include_pos; ++len) {
    for (int s = 1; s + len - 1 <= n; ++s) {
      const int e = s + len - 1;
      if (s <= include_pos && include_pos <= e && !(s <= exclude_pos && exclude_pos <= e))
        out.push_back(FactorWindow{s, len});
    }
  }
  return out;
}

inline int count_candidate_windows(int n, int include_pos, int exclude_pos) {
  return static_cast<int>(candidate_windows(n, include_pos, exclude_pos).size());
}

// Minimal-factor pruning: a violating window can always be shrunk to one that
// starts and ends with a 1, so windows failing this test are skippable.
inline bool passes_min_factor_filter(const BinaryWord& word, const FactorWindow& win) {
  const int e = win.start + win.length - 1;
  if (win.start < 1 || win.length < 1 || e > word.size())
    throw std::out_of_range("passes_min_factor_filter: window [" + std::to_string(win.start) +
                            ",len " + std::to_string(win.length) + "] outside word of size " +
                            std::to_string(word.size()));
  return word.at(win.start) == 1 && word.at(e) == 1;
}

enum class WindowFilter {
  ones_at_ends,  // default: skip windows whose endpoints are not both 1
  none,          // scan every candidate window (verification mode)
};

struct SwapContext {
  Generator generator;
  int j;            // swap exchanges entries j and j+1
  int first_flip;   // g(j): still 1 in the pivot, flips first in the original chain
  int second_flip;  // g(j+1): flips first in the swapped chain
  BinaryWord pivot; // chain word j, the last word the two chains share
};

inline SwapContext make_swap_context(const Generator& g, int j) {
  const int n = g.size();
  if (j < 1 || j > n - 1)
    throw std::out_of_range("make_swap_context: j = " + std::to_string(j) + " outside [1," +
                            std::to_string(n - 1) + "]");
  std::vector<Bit> cur(static_cast<std::size_t>(n), 1);
  for (int i = 1; i < j; ++i) cur[static_cast<std::size_t>(g.at(i) - 1)] = 0;
  return SwapContext{g, j, g.at(j), g.at(j + 1), BinaryWord(std::move(cur))};
}

// First window of the pivot witnessing that the swapped chain loses prefix
// normality, or nullopt if none exists.  Requires the descending case
// first_flip > second_flip; the ascending case needs no window scan.
inline std::optional<FactorWindow> find_violating_factor(
    const SwapContext& ctx, WindowFilter filter = WindowFilter::ones_at_ends) {
  if (ctx.first_flip <= ctx.second_flip)
    throw std::invalid_argument("find_violating_factor: needs descending entries, got g(j)=" +
                                std::to_string(ctx.first_flip) + " <= g(j+1)=" +
                                std::to_string(ctx.second_flip));
  const std::vector<int> pre = prefix_ones(ctx.pivot.bits());
  for (const FactorWindow& win :
       candidate_windows(ctx.pivot.size(), ctx.first_flip, ctx.second_flip)) {
    if (filter == WindowFilter::ones_at_ends && !passes_min_factor_filter(ctx.pivot, win))
      continue;
    const int ones = pre[static_cast<std::size_t>(win.start + win.length - 1)] -
                     pre[static_cast<std::size_t>(win.start - 1)];
    if (ones >= pre[static_cast<std::size_t>(win.length)]) return win;
  }
  return std::nullopt;
}

// Does swapping entries j and j+1 of a prefix normal generator leave it
// prefix normal?  Ascending entries always do; descending entries are decided
// by the pivot window scan above.
inline bool swap_keeps_pn(const Generator& g, int j,
                          WindowFilter filter = WindowFilter::ones_at_ends) {
  if (j < 1 || j > g.size() - 1)
    throw std::out_of_range("swap_keeps_pn: j = " + std::to_string(j) + " outside [1," +
                            std::to_string(g.size() - 1) + "]");
  if (!is_pn_generator(g))
    throw std::invalid_argument("swap_keeps_pn: generator " + g.str() +
                                " is not prefix normal");
  if (g.at(j) < g.at(j + 1)) return true;
  return !find_violating_factor(make_swap_context(g, j), filter).has_value();
}

// Brute-force referee: rebuild the swapped chain and test every word with the
// definition-literal predicate.  No shared logic with swap_keeps_pn beyond
// the chain construction itself.
inline bool swap_keeps_pn_oracle(const Generator& g, int j) {
  if (j < 1 || j > g.size() - 1)
    throw std::out_of_range("swap_keeps_pn_oracle: j = " + std::to_string(j) + " outside [1," +
                            std::to_string(g.size() - 1) + "]");
  for (const BinaryWord& w : chain(g).words)
    if (!is_prefix_normal_oracle(w))
      throw std::invalid_argument("swap_keeps_pn_oracle: generator " + g.str() +
                                  " is not prefix normal");
  for (const BinaryWord& w : chain(swap_adjacent(g, j)).words)
    if (!is_prefix_normal_oracle(w)) return false;
  return true;
}

}  // namespace pnchain

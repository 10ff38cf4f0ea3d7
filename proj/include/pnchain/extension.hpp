#pragma once

#include <stdexcept>
#include <string>

#include "pnchain/word.hpp"

// Extension behaviour of prefix normal words: which words survive appending a
// 1, and how extendability propagates to parents (words with one more 1).
//
// Appending 0 never breaks prefix normality; appending 1 can.  A prefix
// normal word w is extension-critical when w1 is not prefix normal.

namespace pnchain {

inline bool is_extension_critical(const BinaryWord& w) {
  if (!is_prefix_normal(w))
    throw std::invalid_argument("is_extension_critical: word " + w.str() +
                                " is not prefix normal");
  return !is_prefix_normal(w.appended(1));
}

// Sufficient condition: a prefix normal palindrome containing at least one 0
// is always extension-critical.  Returns whether the rule fires for w; false
// for words the rule does not cover (including non-prefix-normal input).
inline bool palindrome_rule(const BinaryWord& w) {
  return w.zeros_count() >= 1 && is_palindrome(w) && is_prefix_normal(w);
}

// For prefix normal w with w1 prefix normal and at least one 0: some prefix
// normal parent w' of w also has w'1 prefix normal.  Returns the first such
// parent in ascending word order.
inline BinaryWord extendable_parent(const BinaryWord& w) {
  if (!is_prefix_normal(w))
    throw std::invalid_argument("extendable_parent: word " + w.str() + " is not prefix normal");
  if (!is_prefix_normal(w.appended(1)))
    throw std::invalid_argument("extendable_parent: word " + w.str() +
                                " does not extend by 1");
  if (w.zeros_count() == 0)
    throw std::invalid_argument("extendable_parent: all-ones word has no parents");
  for (const BinaryWord& parent : pn_parents(w))
    if (is_prefix_normal(parent.appended(1))) return parent;
  // Unreachable for inputs meeting the preconditions; reaching it would be a
  // genuine counterexample to the parent-extension property.
  throw std::logic_error("extendable_parent: no extendable parent for " + w.str());
}

}  // namespace pnchain

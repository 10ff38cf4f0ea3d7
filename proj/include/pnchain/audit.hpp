#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnchain/chain.hpp"
#include "pnchain/enumeration.hpp"
#include "pnchain/swap.hpp"
#include "pnchain/word.hpp"

// Desk-scale audit of the structural claims this library is built on, plus a
// ladder-vs-brute-force benchmark.  The audit re-derives everything from the
// brute-force referees, so it reports what actually holds in range --
// including the known boundary failure of the composition claim at n=1 and
// the candidate-window counts that exceed the quadratic estimate.

namespace pnchain {

enum class ClaimStatus { pass, fail, observation };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    default: return "OBSERVATION";
  }
}

struct ClaimResult {
  std::string claim;
  ClaimStatus status;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct WindowCountRow {
  int n;
  int max_count;    // max over pairs a > b >= 2 of |candidate_windows(n, a, b)|
  int max_include;  // a attaining the max
  int max_exclude;  // b attaining the max
  std::optional<int> stated_pair_count;  // count at (floor((n-2)/2), 2) when valid
  double bound;                          // (n^2 - 2n) / 8
  bool within_bound;                     // max_count <= bound
};

struct ClaimAuditReport {
  int n_max;
  int generator_n_max;  // min(n_max, generator cap): brute generator scans stop here
  std::vector<ClaimResult> claims;
  std::vector<WindowCountRow> window_counts;
};

inline ClaimAuditReport run_claim_audit(int n_max, int generator_cap = kDefaultGeneratorCap) {
  if (n_max < 1) throw std::invalid_argument("run_claim_audit: need n_max >= 1");
  ClaimAuditReport report;
  report.n_max = n_max;
  report.generator_n_max = std::min(n_max, generator_cap);

  std::vector<GeneratorSet> levels;  // brute-force G_n for n = 1..generator_n_max
  for (int n = 1; n <= report.generator_n_max; ++n)
    levels.push_back(brute_force_pn_generators(n, generator_cap));

  std::uint64_t total_gens = 0;
  for (const GeneratorSet& gs : levels) total_gens += gs.generators.size();

  {  // every prefix normal generator clears position 1 last
    ClaimResult r{"generator-last-entry-one", ClaimStatus::pass, "", std::nullopt};
    for (const GeneratorSet& gs : levels)
      for (const Generator& g : gs.generators)
        if (!r.counterexample && g.at(g.size()) != 1) {
          r.status = ClaimStatus::fail;
          r.counterexample = "n=" + std::to_string(gs.n) + ": " + g.str();
        }
    r.detail = "all " + std::to_string(total_gens) + " prefix normal generators with n <= " +
               std::to_string(report.generator_n_max) + (r.counterexample ? " checked" : " end with 1");
    report.claims.push_back(std::move(r));
  }

  {  // first cleared position lies in the right half
    ClaimResult r{"generator-first-entry-late", ClaimStatus::pass, "", std::nullopt};
    for (const GeneratorSet& gs : levels)
      for (const Generator& g : gs.generators)
        if (!r.counterexample && g.at(1) < (gs.n + 2) / 2) {
          r.status = ClaimStatus::fail;
          r.counterexample = "n=" + std::to_string(gs.n) + ": " + g.str();
        }
    r.detail = "g(1) >= ceil((n+1)/2) for all " + std::to_string(total_gens) +
               " prefix normal generators with n <= " + std::to_string(report.generator_n_max);
    report.claims.push_back(std::move(r));
  }

  {  // composing two prefix normal generators never yields one
    ClaimResult r{"composition-never-pn", ClaimStatus::pass, "", std::nullopt};
    std::uint64_t pairs = 0;
    std::vector<int> violating_ns;
    for (const GeneratorSet& gs : levels) {
      bool violated = false;
      for (const Generator& g1 : gs.generators) {
        for (const Generator& g2 : gs.generators) {
          ++pairs;
          const Generator c = compose(g1, g2);
          if (necessary_conditions(c).last_is_one || is_pn_generator(c)) {
            violated = true;
            if (!r.counterexample)
              r.counterexample = "n=" + std::to_string(gs.n) + ": compose(" + g1.str() + "; " +
                                 g2.str() + ") = " + c.str() +
                                 (is_pn_generator(c) ? ", itself a prefix normal generator"
                                                     : ", ends with 1");
          }
        }
      }
      if (violated) violating_ns.push_back(gs.n);
    }
    if (!violating_ns.empty()) r.status = ClaimStatus::fail;
    r.detail = std::to_string(pairs) + " ordered pairs checked for n <= " +
               std::to_string(report.generator_n_max);
    if (violating_ns.size() == 1 && violating_ns[0] == 1)
      r.detail += "; fails only at n=1, where the identity composes to itself";
    else if (violating_ns.empty())
      r.detail += "; no composition stays prefix normal";
    report.claims.push_back(std::move(r));
  }

  {  // length-4 generators realise both parities
    ClaimResult r{"length4-parity-both", ClaimStatus::pass, "", std::nullopt};
    if (report.generator_n_max < 4) {
      r.status = ClaimStatus::observation;
      r.detail = "not evaluated: needs generator range up to n=4";
    } else {
      const GeneratorSet& g4 = levels[3];
      int even = 0, odd = 0;
      std::string listing;
      for (const Generator& g : g4.generators) {
        (parity(g) == Parity::even ? even : odd)++;
        if (!listing.empty()) listing += ", ";
        listing += g.str() + ":" + std::to_string(inversions(g));
      }
      if (even == 0 || odd == 0) r.status = ClaimStatus::fail;
      r.detail = "inversion counts " + listing + " -> " + std::to_string(even) + " even, " +
                 std::to_string(odd) + " odd";
    }
    report.claims.push_back(std::move(r));
  }

  // Candidate-window growth, reported but never asserted: the quadratic
  // estimate (n^2-2n)/8 is attained at (floor((n-2)/2), 2) under one counting
  // of windows, but the max over all pairs under this module's counting can
  // exceed it.
  for (int n = 3; n <= n_max; ++n) {
    WindowCountRow row{n, -1, 0, 0, std::nullopt, (static_cast<double>(n) * n - 2.0 * n) / 8.0,
                       true};
    for (int a = 3; a <= n; ++a) {
      for (int b = 2; b < a; ++b) {
        const int c = count_candidate_windows(n, a, b);
        if (c > row.max_count) {
          row.max_count = c;
          row.max_include = a;
          row.max_exclude = b;
        }
      }
    }
    const int stated_a = (n - 2) / 2;
    if (stated_a >= 3) row.stated_pair_count = count_candidate_windows(n, stated_a, 2);
    row.within_bound = static_cast<double>(row.max_count) <= row.bound;
    report.window_counts.push_back(row);
  }

  return report;
}

// Ladder-vs-brute comparison at level n: the ladder step turns PN(n-1) into
// PN(n), examining |PN(n-1)| candidates; the brute filter scans all 2^n
// words.  Counts from both sides must agree.
struct BenchReport {
  int n;
  std::uint64_t ladder_candidates;  // |PN(n-1)|
  std::uint64_t brute_candidates;   // 2^n
  std::uint64_t ladder_count;       // |PN(n)| via the ladder
  std::uint64_t brute_count;        // |PN(n)| via the filter
  double ladder_step_seconds;       // the PN(n-1) -> PN(n) step alone
  double ladder_total_seconds;      // full ladder from the empty word
  double brute_seconds;

  double candidate_ratio() const {
    return static_cast<double>(ladder_candidates) / static_cast<double>(brute_candidates);
  }
  double speedup() const { return brute_seconds / ladder_step_seconds; }
};

inline BenchReport run_bench(int n, int cap = kDefaultWordCap, int workers = 1) {
  if (n < 1) throw std::invalid_argument("run_bench: need n >= 1");
  if (n > cap)
    throw std::invalid_argument("run_bench: n = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };

  const auto t0 = clock::now();
  const PnWordSet prev = enumerate_pn_words(n - 1, cap, workers);
  const auto t1 = clock::now();
  const PnWordSet last = next_level(prev, workers);
  const auto t2 = clock::now();

  std::vector<Bit> bits(static_cast<std::size_t>(n), 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t brute_count = 0;
  for (std::uint64_t it = 0; it < total; ++it) {
    if (is_prefix_normal(bits)) ++brute_count;
    for (int i = n - 1; i >= 0; --i) {
      if (bits[static_cast<std::size_t>(i)] == 0) {
        bits[static_cast<std::size_t>(i)] = 1;
        break;
      }
      bits[static_cast<std::size_t>(i)] = 0;
    }
  }
  const auto t3 = clock::now();

  return BenchReport{n,
                     prev.words.size(),
                     total,
                     last.words.size(),
                     brute_count,
                     seconds(t1, t2),
                     seconds(t0, t2),
                     seconds(t2, t3)};
}

}  // namespace pnchain

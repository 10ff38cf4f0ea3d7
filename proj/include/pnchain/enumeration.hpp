#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pnchain/chain.hpp"
#include "pnchain/word.hpp"

// Enumeration of prefix normal words and generators.
//
// Words: level-by-level ladder.  PN(n+1) is exactly {w0 : w in PN(n)} plus
// {w1 : w in PN(n), w1 prefix normal}, so each level is built from the
// previous one instead of filtering all 2^(n+1) words.
//
// Generators: every prefix normal generator of length n+1 arises from one of
// length n by inserting the new maximum n+1, and the valid insert positions
// form a gapless prefix 1..p_max.
//
// Brute-force counterparts (full 2^n / n! scans against the definition-literal
// word predicate) are kept as referees for tests.

namespace pnchain {

inline constexpr int kDefaultWordCap = 24;      // 2^n scan / level sizes stay sane
inline constexpr int kDefaultGeneratorCap = 8;  // n! scan cap

struct PnWordSet {
  int n = 0;
  std::vector<BinaryWord> words;  // strictly ascending
};

struct GeneratorSet {
  int n = 0;
  std::vector<Generator> generators;  // strictly ascending
};

namespace detail {

// Runs fn(shard, begin, end) over contiguous index shards.  Shards are
// assigned in order, so concatenating per-shard output in shard order is
// independent of thread scheduling.
template <typename Fn>
void run_sharded(std::size_t count, int shards, Fn&& fn) {
  if (shards <= 1 || count <= 1) {
    fn(0, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(shards));
  const std::size_t base = count / static_cast<std::size_t>(shards);
  const std::size_t extra = count % static_cast<std::size_t>(shards);
  std::size_t begin = 0;
  for (int s = 0; s < shards; ++s) {
    const std::size_t len = base + (static_cast<std::size_t>(s) < extra ? 1 : 0);
    threads.emplace_back(fn, s, begin, begin + len);
    begin += len;
  }
  for (std::thread& t : threads) t.join();
}

// Given prefix normal w through its prefix-ones table, decide whether w1 is
// still prefix normal.  Since w is prefix normal, any violating window of w1
// must end at the appended 1, i.e. be a suffix: ones(last k-1 of w) + 1 must
// stay <= P(k) for every k.  O(n) instead of re-profiling the whole word.
inline bool append_one_keeps_pn(const std::vector<int>& pre) {
  const int n = static_cast<int>(pre.size()) - 1;
  for (int k = 1; k <= n; ++k) {
    if (pre[static_cast<std::size_t>(n)] - pre[static_cast<std::size_t>(n - k + 1)] + 1 >
        pre[static_cast<std::size_t>(k)])
      return false;
  }
  return true;
}

}  // namespace detail

// One ladder step: children of a sorted level come out sorted because w0 < w1
// and extensions preserve the parents' order.  Relies on the level invariant
// that every input word is prefix normal.
inline PnWordSet next_level(const PnWordSet& level, int workers = 1) {
  PnWordSet out;
  out.n = level.n + 1;
  const std::size_t m = level.words.size();
  const int shards = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), std::max<std::size_t>(m, 1)));
  std::vector<std::vector<BinaryWord>> parts(static_cast<std::size_t>(shards));
  detail::run_sharded(m, shards, [&](int shard, std::size_t b, std::size_t e) {
    std::vector<BinaryWord>& dst = parts[static_cast<std::size_t>(shard)];
    std::vector<int> pre;
    std::vector<Bit> buf;
    for (std::size_t i = b; i < e; ++i) {
      const BinaryWord& w = level.words[i];
      const auto bits = w.bits();
      pre.assign(bits.size() + 1, 0);
      for (std::size_t p = 0; p < bits.size(); ++p) pre[p + 1] = pre[p] + bits[p];
      buf.assign(bits.begin(), bits.end());
      buf.push_back(0);
      dst.push_back(BinaryWord(buf));  // w0 is always prefix normal
      if (detail::append_one_keeps_pn(pre)) {
        buf.back() = 1;
        dst.push_back(BinaryWord(buf));
      }
    }
  });
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.words.reserve(total);
  for (auto& p : parts)
    out.words.insert(out.words.end(), std::make_move_iterator(p.begin()),
                     std::make_move_iterator(p.end()));
  return out;
}

inline PnWordSet enumerate_pn_words(int n, int cap = kDefaultWordCap, int workers = 1) {
  if (n < 0) throw std::invalid_argument("enumerate_pn_words: negative n");
  if (n > cap)
    throw std::invalid_argument("enumerate_pn_words: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  PnWordSet level;
  level.n = 0;
  level.words = {BinaryWord{}};
  for (int k = 0; k < n; ++k) level = next_level(level, workers);
  return level;
}

// Reference enumerator: walk all 2^n words in ascending order and keep the
// ones passing the definition-literal predicate.  Slow on purpose.
inline PnWordSet brute_force_pn_words(int n, int cap = kDefaultWordCap) {
  if (n < 0) throw std::invalid_argument("brute_force_pn_words: negative n");
  if (n > cap)
    throw std::invalid_argument("brute_force_pn_words: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  PnWordSet out;
  out.n = n;
  std::vector<Bit> bits(static_cast<std::size_t>(n), 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t it = 0; it < total; ++it) {
    if (is_prefix_normal_oracle(bits)) out.words.push_back(BinaryWord(bits));
    for (int i = n - 1; i >= 0; --i) {  // ascending binary odometer
      if (bits[static_cast<std::size_t>(i)] == 0) {
        bits[static_cast<std::size_t>(i)] = 1;
        break;
      }
      bits[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

// |PN(n)| must equal the number of next-level words ending in 0, because
// w -> w0 is a bijection between PN(n) and PN(n+1) words with a final 0.
struct CountingCheck {
  std::uint64_t pn_count;
  std::uint64_t next_level_ending_zero;
  bool equal;
};

inline CountingCheck counting_check(int n, int cap = kDefaultWordCap, int workers = 1) {
  if (n < 0 || n + 1 > cap)
    throw std::invalid_argument("counting_check: need 0 <= n and n+1 <= cap");
  PnWordSet level = enumerate_pn_words(n, cap, workers);
  PnWordSet next = next_level(level, workers);
  std::uint64_t zeros = 0;
  for (const BinaryWord& w : next.words)
    if (w.at(n + 1) == 0) ++zeros;
  return CountingCheck{level.words.size(), zeros, level.words.size() == zeros};
}

struct CountRow {
  int n;
  std::uint64_t pn_count;
  std::uint64_t binary_count;  // 2^n
  double ratio;                // pn_count / 2^n
};

inline std::vector<CountRow> pn_count_sequence(int n_max, int cap = kDefaultWordCap,
                                               int workers = 1) {
  if (n_max < 1) throw std::invalid_argument("pn_count_sequence: need n_max >= 1");
  if (n_max > cap)
    throw std::invalid_argument("pn_count_sequence: n_max = " + std::to_string(n_max) +
                                " exceeds cap " + std::to_string(cap));
  std::vector<CountRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  PnWordSet level;
  level.n = 0;
  level.words = {BinaryWord{}};
  for (int k = 1; k <= n_max; ++k) {
    level = next_level(level, workers);
    const std::uint64_t total = std::uint64_t{1} << k;
    rows.push_back(CountRow{k, level.words.size(), total,
                            static_cast<double>(level.words.size()) / static_cast<double>(total)});
  }
  return rows;
}

// ---- generators ----

// Reference enumerator over all n! permutations, chain words tested with the
// definition-literal predicate.
inline GeneratorSet brute_force_pn_generators(int n, int cap = kDefaultGeneratorCap) {
  if (n < 1) throw std::invalid_argument("brute_force_pn_generators: need n >= 1");
  if (n > cap)
    throw std::invalid_argument("brute_force_pn_generators: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  GeneratorSet out;
  out.n = n;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    Generator g = Generator::make(v);
    bool ok = true;
    for (const BinaryWord& w : chain(g).words) {
      if (!is_prefix_normal_oracle(w)) {
        ok = false;
        break;
      }
    }
    if (ok) out.generators.push_back(std::move(g));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Largest p such that inserting n+1 at every position 1..p keeps the
// generator prefix normal.  Valid positions form a gapless prefix, so the
// scan stops at the first failure.  Position 1 always works: the extended
// chain is 1^(n+1) followed by the old chain words with 0 appended.
inline int max_insert_position(const Generator& g) {
  if (!is_pn_generator(g))
    throw std::invalid_argument("max_insert_position: generator " + g.str() +
                                " is not prefix normal");
  const int n = g.size();
  int p = 1;
  while (p <= n + 1 && is_pn_generator(insert_new_max(g, p))) ++p;
  return p - 1;
}

// Verification-mode counterpart: test every insert position independently.
inline std::vector<int> valid_insert_positions(const Generator& g) {
  if (!is_pn_generator(g))
    throw std::invalid_argument("valid_insert_positions: generator " + g.str() +
                                " is not prefix normal");
  std::vector<int> out;
  for (int p = 1; p <= g.size() + 1; ++p)
    if (is_pn_generator(insert_new_max(g, p))) out.push_back(p);
  return out;
}

// All length-(n+1) prefix normal generators reachable from a complete length-n
// level.  Insertion is injective, so sorting suffices for canonical order.
inline GeneratorSet extend_generators(const GeneratorSet& level, bool full_scan = false) {
  GeneratorSet out;
  out.n = level.n + 1;
  for (const Generator& g : level.generators) {
    if (full_scan) {
      for (int p : valid_insert_positions(g)) out.generators.push_back(insert_new_max(g, p));
    } else {
      const int pmax = max_insert_position(g);
      for (int p = 1; p <= pmax; ++p) out.generators.push_back(insert_new_max(g, p));
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  return out;
}

inline GeneratorSet generators_by_extension(int n, int cap = kDefaultGeneratorCap,
                                            bool full_scan = false) {
  if (n < 1) throw std::invalid_argument("generators_by_extension: need n >= 1");
  if (n > cap)
    throw std::invalid_argument("generators_by_extension: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  GeneratorSet level;
  level.n = 1;
  level.generators = {Generator::make({1})};
  while (level.n < n) level = extend_generators(level, full_scan);
  return level;
}

// Union of all chain words of the given generators (deduplicated, sorted).
inline PnWordSet words_from_generators(const GeneratorSet& gens) {
  PnWordSet out;
  out.n = gens.n;
  out.words.reserve(gens.generators.size() * (static_cast<std::size_t>(gens.n) + 1));
  for (const Generator& g : gens.generators)
    for (const BinaryWord& w : chain(g).words) out.words.push_back(w);
  std::sort(out.words.begin(), out.words.end());
  out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
  return out;
}

// ---- level cache ----
//
// One file per level.  Words: "pn v1 n=<n> count=<c>" header, then one word
// per line.  Generators: "pngen v1 n=<n> count=<c>" header, then one
// comma-separated permutation per line.  Files are validated on read and
// levels are only written after their structural invariants hold.

class LevelCache {
 public:
  explicit LevelCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path words_path(int n) const {
    return dir_ / ("pn_words_" + std::to_string(n) + ".txt");
  }
  std::filesystem::path generators_path(int n) const {
    return dir_ / ("pn_gens_" + std::to_string(n) + ".txt");
  }

  std::optional<PnWordSet> read_words(int n) const {
    std::ifstream in(words_path(n));
    if (!in) return std::nullopt;
    const auto [hn, count] = parse_header(in, "pn", words_path(n));
    if (hn != n)
      throw std::runtime_error("cache: " + words_path(n).string() + " header n=" +
                               std::to_string(hn) + " does not match file name");
    PnWordSet set;
    set.n = n;
    set.words.reserve(count);
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line))
        throw std::runtime_error("cache: " + words_path(n).string() + " truncated");
      BinaryWord w = BinaryWord::parse(line);
      if (w.size() != n)
        throw std::runtime_error("cache: " + words_path(n).string() + " word '" + line +
                                 "' has wrong length");
      if (!set.words.empty() && !(set.words.back() < w))
        throw std::runtime_error("cache: " + words_path(n).string() + " words out of order");
      set.words.push_back(std::move(w));
    }
    return set;
  }

  void write_words(const PnWordSet& set) const {
    for (std::size_t i = 0; i < set.words.size(); ++i) {
      if (set.words[i].size() != set.n)
        throw std::invalid_argument("cache: refusing to write word of wrong length");
      if (i > 0 && !(set.words[i - 1] < set.words[i]))
        throw std::invalid_argument("cache: refusing to write unsorted level");
    }
    std::ofstream out(words_path(set.n), std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot open " + words_path(set.n).string());
    out << "pn v1 n=" << set.n << " count=" << set.words.size() << "\n";
    for (const BinaryWord& w : set.words) out << w.str() << "\n";
    if (!out.flush())
      throw std::runtime_error("cache: write failed for " + words_path(set.n).string());
  }

  std::optional<GeneratorSet> read_generators(int n) const {
    std::ifstream in(generators_path(n));
    if (!in) return std::nullopt;
    const auto [hn, count] = parse_header(in, "pngen", generators_path(n));
    if (hn != n)
      throw std::runtime_error("cache: " + generators_path(n).string() + " header n=" +
                               std::to_string(hn) + " does not match file name");
    GeneratorSet set;
    set.n = n;
    set.generators.reserve(count);
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line))
        throw std::runtime_error("cache: " + generators_path(n).string() + " truncated");
      Generator g = Generator::parse(line);
      if (g.size() != n)
        throw std::runtime_error("cache: " + generators_path(n).string() + " generator '" +
                                 line + "' has wrong length");
      if (!set.generators.empty() && !(set.generators.back() < g))
        throw std::runtime_error("cache: " + generators_path(n).string() +
                                 " generators out of order");
      set.generators.push_back(std::move(g));
    }
    return set;
  }

  void write_generators(const GeneratorSet& set) const {
    for (std::size_t i = 0; i < set.generators.size(); ++i) {
      if (set.generators[i].size() != set.n)
        throw std::invalid_argument("cache: refusing to write generator of wrong length");
      if (i > 0 && !(set.generators[i - 1] < set.generators[i]))
        throw std::invalid_argument("cache: refusing to write unsorted level");
    }
    std::ofstream out(generators_path(set.n), std::ios::trunc);
    if (!out)
      throw std::runtime_error("cache: cannot open " + generators_path(set.n).string());
    out << "pngen v1 n=" << set.n << " count=" << set.generators.size() << "\n";
    for (const Generator& g : set.generators) out << g.str() << "\n";
    if (!out.flush())
      throw std::runtime_error("cache: write failed for " + generators_path(set.n).string());
  }

 private:
  static std::pair<int, std::size_t> parse_header(std::ifstream& in, const std::string& magic,
                                                  const std::filesystem::path& path) {
    std::string header;
    if (!std::getline(in, header))
      throw std::runtime_error("cache: " + path.string() + " is empty");
    std::istringstream hs(header);
    std::string tag, ver, nfield, cfield;
    hs >> tag >> ver >> nfield >> cfield;
    if (tag != magic || ver != "v1" || nfield.rfind("n=", 0) != 0 ||
        cfield.rfind("count=", 0) != 0 || !hs.eof())
      throw std::runtime_error("cache: " + path.string() + " has bad header '" + header + "'");
    try {
      const int n = std::stoi(nfield.substr(2));
      const std::size_t count = static_cast<std::size_t>(std::stoull(cfield.substr(6)));
      if (n < 0 || count > (std::size_t{1} << 32))
        throw std::invalid_argument("header out of range");
      return {n, count};
    } catch (const std::exception&) {
      throw std::runtime_error("cache: " + path.string() + " has bad header '" + header + "'");
    }
  }

  std::filesystem::path dir_;
};

// Ladder enumeration resuming from the deepest cached level; every newly
// computed level is written back.
inline PnWordSet enumerate_pn_words_cached(int n, const LevelCache& cache,
                                           int cap = kDefaultWordCap, int workers = 1) {
  if (n < 0) throw std::invalid_argument("enumerate_pn_words_cached: negative n");
  if (n > cap)
    throw std::invalid_argument("enumerate_pn_words_cached: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  PnWordSet level;
  level.n = 0;
  level.words = {BinaryWord{}};
  for (int k = n; k >= 1; --k) {
    if (std::optional<PnWordSet> cached = cache.read_words(k)) {
      level = std::move(*cached);
      break;
    }
  }
  while (level.n < n) {
    level = next_level(level, workers);
    cache.write_words(level);
  }
  return level;
}

inline GeneratorSet generators_by_extension_cached(int n, const LevelCache& cache,
                                                   int cap = kDefaultGeneratorCap,
                                                   bool full_scan = false) {
  if (n < 1) throw std::invalid_argument("generators_by_extension_cached: need n >= 1");
  if (n > cap)
    throw std::invalid_argument("generators_by_extension_cached: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  GeneratorSet level;
  level.n = 1;
  level.generators = {Generator::make({1})};
  for (int k = n; k >= 2; --k) {
    if (std::optional<GeneratorSet> cached = cache.read_generators(k)) {
      level = std::move(*cached);
      break;
    }
  }
  while (level.n < n) {
    level = extend_generators(level, full_scan);
    cache.write_generators(level);
  }
  return level;
}

}  // namespace pnchain

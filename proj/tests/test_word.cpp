#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "pnchain/word.hpp"
#include "support.hpp"

using pnchain::BinaryWord;

namespace {

std::vector<std::string> strs(const std::vector<BinaryWord>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

TEST_CASE("parse/str round trip and validation", "[word]") {
  CHECK(BinaryWord::parse("110100").str() == "110100");
  CHECK(BinaryWord::parse("").str() == "");
  CHECK(BinaryWord::parse("1").size() == 1);
  CHECK_THROWS_AS(BinaryWord::parse("10x1"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse("10 1"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord(std::vector<pnchain::Bit>{0, 2}), std::invalid_argument);
}

TEST_CASE("basic accessors", "[word]") {
  const BinaryWord w = BinaryWord::parse("110100");
  CHECK(w.size() == 6);
  CHECK(w.ones_count() == 3);
  CHECK(w.zeros_count() == 3);
  CHECK(w.at(1) == 1);
  CHECK(w.at(3) == 0);
  CHECK(w.at(6) == 0);
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(7), std::out_of_range);
  CHECK(BinaryWord::zeros(3).str() == "000");
  CHECK(BinaryWord::ones(4).str() == "1111");
  CHECK(BinaryWord::ones(0).empty());
  CHECK(w.appended(1).str() == "1101001");
  CHECK(w.prepended(1).str() == "1110100");
}

TEST_CASE("word ordering matches string ordering", "[word]") {
  CHECK(BinaryWord::parse("0") < BinaryWord::parse("1"));
  CHECK(BinaryWord::parse("10") < BinaryWord::parse("11"));
  CHECK(BinaryWord::parse("1") < BinaryWord::parse("10"));
  CHECK(BinaryWord::parse("0111") < BinaryWord::parse("1000"));
  CHECK(BinaryWord::parse("101") == BinaryWord::parse("101"));
}

TEST_CASE("ones profile on known words", "[word]") {
  using V = std::vector<int>;
  const auto p1 = pnchain::ones_profile(BinaryWord::parse("110100"));
  CHECK(p1.prefix_ones == V{0, 1, 2, 2, 3, 3, 3});
  CHECK(p1.max_factor_ones == V{0, 1, 2, 2, 3, 3, 3});

  // 101100 has no 111 factor, so F(3) stays at 2 while P(3) reaches 2 late.
  const auto p2 = pnchain::ones_profile(BinaryWord::parse("101100"));
  CHECK(p2.prefix_ones == V{0, 1, 1, 2, 3, 3, 3});
  CHECK(p2.max_factor_ones == V{0, 1, 2, 2, 3, 3, 3});

  const auto p3 = pnchain::ones_profile(BinaryWord::parse("1111"));
  CHECK(p3.prefix_ones == V{0, 1, 2, 3, 4});
  CHECK(p3.max_factor_ones == V{0, 1, 2, 3, 4});

  CHECK(pnchain::ones_profile(BinaryWord{}).prefix_ones == V{0});
}

TEST_CASE("profile invariants on random words", "[word]") {
  std::mt19937 rng(12345);
  for (int round = 0; round < 300; ++round) {
    const int n = 1 + static_cast<int>(rng() % 200);
    std::vector<pnchain::Bit> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<pnchain::Bit>(rng() & 1);
    const BinaryWord w{bits};
    const auto prof = pnchain::ones_profile(w);
    REQUIRE(prof.prefix_ones.size() == static_cast<std::size_t>(n) + 1);
    REQUIRE(prof.max_factor_ones.size() == static_cast<std::size_t>(n) + 1);
    CHECK(prof.prefix_ones[0] == 0);
    CHECK(prof.max_factor_ones[0] == 0);
    for (int k = 1; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      CHECK(prof.prefix_ones[ku] >= prof.prefix_ones[ku - 1]);
      CHECK(prof.max_factor_ones[ku] >= prof.max_factor_ones[ku - 1]);
      CHECK(prof.max_factor_ones[ku] - prof.max_factor_ones[ku - 1] <= 1);
      CHECK(prof.prefix_ones[ku] <= prof.max_factor_ones[ku]);
    }
    const bool profile_equal = prof.prefix_ones == prof.max_factor_ones;
    CHECK(profile_equal == pnchain::is_prefix_normal(w));
  }
}

TEST_CASE("prefix normality on known words", "[word]") {
  CHECK(pnchain::is_prefix_normal(BinaryWord::parse("110100")));
  CHECK_FALSE(pnchain::is_prefix_normal(BinaryWord::parse("101100")));
  CHECK_FALSE(pnchain::is_prefix_normal(BinaryWord::parse("01")));
  CHECK(pnchain::is_prefix_normal(BinaryWord::parse("0000")));
  CHECK(pnchain::is_prefix_normal(BinaryWord::parse("")));
  CHECK(pnchain::is_prefix_normal(BinaryWord::parse("1")));
  CHECK(pnchain::is_prefix_normal(BinaryWord::parse("0")));
  CHECK(pnchain::is_prefix_normal(BinaryWord::parse("111010")));
}

TEST_CASE("fast predicate, literal oracle and reference profile agree exhaustively",
          "[word][exhaustive]") {
  for (int n = 0; n <= 14; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const std::string s = testref::word_of(m, n);
      const BinaryWord w = BinaryWord::parse(s);
      const bool fast = pnchain::is_prefix_normal(w);
      const bool oracle = pnchain::is_prefix_normal_oracle(w);
      const bool ref = testref::pn(s);
      if (fast != oracle || fast != ref) {
        CAPTURE(s, fast, oracle, ref);
        FAIL("prefix-normal predicates disagree");
      }
    }
  }
  SUCCEED("all three predicates agree for every word of length <= 14");
}

TEST_CASE("prefix closure, prepend 1 and append 0 preserve prefix normality",
          "[word][exhaustive]") {
  for (int n = 0; n <= 14; ++n) {
    for (const std::string& s : testref::all_pn_words(n)) {
      const BinaryWord w = BinaryWord::parse(s);
      for (int k = 0; k < n; ++k)
        if (!pnchain::is_prefix_normal(BinaryWord::parse(s.substr(0, static_cast<std::size_t>(k))))) {
          CAPTURE(s, k);
          FAIL("prefix of a prefix normal word is not prefix normal");
        }
      if (!pnchain::is_prefix_normal(w.prepended(1)) || !pnchain::is_prefix_normal(w.appended(0))) {
        CAPTURE(s);
        FAIL("1w or w0 lost prefix normality");
      }
    }
  }
  SUCCEED("closure properties hold for every prefix normal word of length <= 14");
}

TEST_CASE("flip", "[word]") {
  const BinaryWord w = BinaryWord::parse("110100");
  CHECK(pnchain::flip(w, 2).str() == "100100");
  CHECK(w.with_flip(1).str() == "010100");
  CHECK_THROWS_AS(pnchain::flip(w, 3), std::invalid_argument);  // already 0
  CHECK_THROWS_AS(pnchain::flip(w, 0), std::out_of_range);
  CHECK_THROWS_AS(pnchain::flip(w, 7), std::out_of_range);
}

TEST_CASE("palindrome test", "[word]") {
  CHECK(pnchain::is_palindrome(BinaryWord::parse("101")));
  CHECK_FALSE(pnchain::is_palindrome(BinaryWord::parse("110")));
  CHECK(pnchain::is_palindrome(BinaryWord::parse("1001")));
  CHECK(pnchain::is_palindrome(BinaryWord::parse("0110")));
  CHECK(pnchain::is_palindrome(BinaryWord::parse("")));
  CHECK(pnchain::is_palindrome(BinaryWord::parse("1")));
}

TEST_CASE("pn parents on known words", "[word]") {
  CHECK(strs(pnchain::pn_parents(BinaryWord::parse("1010"))) ==
        std::vector<std::string>{"1110"});
  CHECK(strs(pnchain::pn_parents(BinaryWord::parse("100100"))) ==
        std::vector<std::string>{"110100"});
  CHECK(pnchain::pn_parents(BinaryWord::parse("1111")).empty());
  CHECK(strs(pnchain::pn_parents(BinaryWord::parse("100"))) ==
        std::vector<std::string>{"101", "110"});
}

TEST_CASE("pn parents are exactly the prefix normal single-bit raises", "[word][exhaustive]") {
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const std::string s = testref::word_of(m, n);
      std::vector<std::string> expected;
      for (int i = n - 1; i >= 0; --i) {
        if (s[static_cast<std::size_t>(i)] == '0') {
          std::string u = s;
          u[static_cast<std::size_t>(i)] = '1';
          if (testref::pn(u)) expected.push_back(u);
        }
      }
      const auto got = strs(pnchain::pn_parents(BinaryWord::parse(s)));
      if (got != expected) {
        CAPTURE(s, got, expected);
        FAIL("pn_parents mismatch");
      }
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
  SUCCEED("pn_parents matches the reference for every word of length <= 10");
}

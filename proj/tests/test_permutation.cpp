#include "doctest.h"
#include "oracles.hpp"
#include "permxray/error.hpp"
#include "permxray/permutation.hpp"

using namespace permxray;

TEST_CASE("S_3 X-rays") {
  CHECK(xray(Permutation::parse("123")).to_string() == "10101");
  CHECK(xray(Permutation::parse("132")).to_string() == "10020");
  CHECK(xray(Permutation::parse("213")).to_string() == "02001");
  CHECK(xray(Permutation::parse("231")).to_string() == "01110");
  CHECK(xray(Permutation::parse("312")).to_string() == "01110");
  CHECK(xray(Permutation::parse("321")).to_string() == "00300");
}

TEST_CASE("worked examples") {
  CHECK(xray(Permutation::parse("1")).to_string() == "1");
  CHECK(xray(Permutation::parse("73142865")).to_string() == "001101200002100");
  CHECK(xray(Permutation::parse("72413865")).to_string() == "001101200002100");
  CHECK(diagonal_xray(Permutation::parse("73142865")).to_string() == "000021111100010");
  CHECK(diagonal_xray(Permutation::parse("72413865")).to_string() == "000021111100010");
  CHECK(xray(Permutation::parse("3124")).to_string() == "0111001");
  // the reversed diagonal X-ray of 3124 is the histogram of i - p(i)
  CHECK(reverse_xray(diagonal_xray(Permutation::parse("3124"))).to_string() == "0101200");
  CHECK(xray(Permutation::parse("25143")).to_string() == "011001200");
  CHECK(xray(reverse(Permutation::parse("25143"))).to_string() == "002011010");
  CHECK(reverse(Permutation::parse("25143")).to_string() == "34152");
}

TEST_CASE("X-rays agree with the materialized matrix for n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation p(v);
      const auto x = xray(p), d = diagonal_xray(p);
      REQUIRE(std::vector<int>(x.word().begin(), x.word().end()) == oracle::xray(v));
      REQUIRE(std::vector<int>(d.word().begin(), d.word().end()) == oracle::dxray(v));
    }
}

TEST_CASE("reflection identities hold exhaustively for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const Permutation p(v);
      REQUIRE(xray(row_reverse(p)).word().size() == diagonal_xray(p).word().size());
      const auto a = xray(row_reverse(p)), d = diagonal_xray(p);
      REQUIRE(std::equal(a.word().begin(), a.word().end(), d.word().begin()));
      REQUIRE(xray(column_reverse(p)) == reverse_xray(Xray(n, Word(d.word().begin(), d.word().end()))));
      REQUIRE(xray(inverse(p)) == xray(p));
      REQUIRE(inverse(inverse(p)) == p);
      REQUIRE(Permutation(oracle::inverse(v)) == inverse(p));
    }
}

TEST_CASE("entry capacity and sum") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : oracle::all_perms(n)) {
      const auto x = xray(Permutation(v));
      int sum = 0;
      for (int k = 1; k <= 2 * n - 1; ++k) {
        REQUIRE(x[k] <= line_capacity(n, k));
        sum += x[k];
      }
      REQUIRE(sum == n);
    }
}

TEST_CASE("parsing and validation") {
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").size() == 10);
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").to_string() == "10,2,3,4,5,6,7,8,9,1");
  CHECK_THROWS_AS(Permutation::parse("112"), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse("124"), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse(""), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::parse("1a"), InvalidPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Xray::parse("0110"), InvalidXray);
  CHECK(Xray::parse("11100").order() == 3);  // well formed, infeasible only for the solver
  CHECK_THROWS_AS(Xray::parse("01100"), InvalidXray);  // sum 2
  CHECK(Xray::parse("01110").order() == 3);
  CHECK_THROWS_AS(parse_word("0x1"), InvalidXray);
  CHECK(format_word(Word{1, 0, 10}) == "1,0,10");
}

TEST_CASE("decimal expansion") {
  CHECK(decimal_expansion(Xray::parse("10101")) == 21);
  CHECK(decimal_expansion(Xray::parse("01110")) == 14);
  CHECK(decimal_expansion(Xray::parse("101010101")) == 341);
  CHECK_THROWS_AS(decimal_expansion(Xray::parse("00300")), NonBinaryXray);
  CHECK_THROWS_AS(decimal_expansion(Word(65, 0)), LimitExceeded);
}

TEST_CASE("involutions and palindromes") {
  CHECK(is_involution(Permutation::parse("2143")));
  CHECK_FALSE(is_involution(Permutation::parse("231")));
  CHECK(is_identity(Permutation::identity(4)));
  CHECK(xray(Permutation::parse("321")).is_palindrome());
  CHECK_FALSE(xray(Permutation::parse("132")).is_palindrome());
  CHECK(column_reverse(Permutation::parse("231")).to_string() == "213");
}

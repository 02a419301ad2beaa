#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "permxray/binary.hpp"
#include "permxray/error.hpp"
#include "permxray/published.hpp"

using namespace permxray;

namespace {

// distinct binary X-rays and the number of permutations having one
std::pair<std::set<std::string>, std::uint64_t> binary_brute(int n) {
  std::set<std::string> words;
  std::uint64_t perms = 0;
  for (const auto& v : oracle::all_perms(n)) {
    const auto x = oracle::xray(v);
    if (*std::max_element(x.begin(), x.end()) <= 1) {
      words.insert(oracle::word(x));
      ++perms;
    }
  }
  return {words, perms};
}

}  // namespace

TEST_CASE("binary X-rays match brute force for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto [words, perms] = binary_brute(n);
    const BinaryXrays b = enumerate_binary(n);
    CHECK(b.permutations == perms);
    std::set<std::string> got;
    for (const auto& w : b.words) got.insert(format_word(w));
    CHECK(got == words);
  }
}

TEST_CASE("lattice points match the subset scan for n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<std::vector<int>> got;
    for (const auto& p : enumerate_lattice_points(n)) {
      REQUIRE(p.satisfies_constraints());
      got.push_back(p.coords);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::lattice_by_subsets(n));
  }
  std::vector<std::string> three;
  for (const auto& p : enumerate_lattice_points(3)) three.push_back(p.to_string());
  std::sort(three.begin(), three.end());
  CHECK(three == std::vector<std::string>{"(1,3,5)", "(2,3,4)"});
}

TEST_CASE("score sequences match Landau's criterion and the lattice count") {
  const std::vector<std::uint64_t> expected = {1, 1, 2, 4, 9, 22, 59, 167, 490};
  for (int n = 1; n <= 9; ++n) {
    const auto pts = enumerate_score_points(n);
    CHECK(pts.size() == oracle::landau_scores(n).size());
    CHECK(pts.size() == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(score_sequences(n) == enumerate_lattice_points(n).size());
    for (const auto& s : pts) {
      REQUIRE(s.satisfies_constraints());
      const LatticePoint x = to_lattice(s);
      REQUIRE(x.satisfies_constraints());
      REQUIRE(to_score(x) == s);
    }
  }
}

TEST_CASE("positions maps binary X-rays injectively into the polytope") {
  for (int n = 1; n <= 9; ++n) {
    const Conjecture1Report r = conjecture1_check(n);
    CHECK(r.injective);
    CHECK(r.in_polytope);
    CHECK(r.b_n <= score_sequences(n));
    CHECK(r.gaps.empty());
  }
  CHECK(positions(Permutation::parse("231")).to_string() == "(2,3,4)");
  CHECK(positions(Permutation::parse("123")).to_string() == "(1,3,5)");
  CHECK_THROWS_AS(positions(Permutation::parse("321")), NonBinaryXray);
}

TEST_CASE("circulant permutations") {
  CHECK(circulant(5, 1).to_string() == "23451");
  CHECK(circulant(5, 0) == Permutation::identity(5));
  CHECK_THROWS_AS(circulant(5, 5), InvalidArgument);
  for (const auto& [n, rows] : published::circulant_table()) {
    const CirculantReport r = circulant_formula_report(n);
    for (const auto& row : rows) {
      bool seen = false;
      for (const auto& c : r.rows)
        if (c.perm.to_string() == row.perm) {
          seen = true;
          CHECK(format_word(c.word) == row.word);
          REQUIRE(c.d_direct);
          CHECK(*c.d_direct == row.d);
        }
      CHECK(seen);
    }
  }
}

TEST_CASE("circulant closed form is reported, not asserted") {
  const CirculantReport r3 = circulant_formula_report(3);
  CHECK(r3.mismatches > 0);
  CHECK(r3.agrees_up_to_reindexing);
  CHECK(circulant_closed_form(3, 0)->to_string() == "14");
  CHECK(circulant_closed_form(5, 2)->to_string() == "186");
  CHECK_FALSE(circulant_closed_form(4, 0).has_value());
  // d(c_n^j) = f(n, (n+1)/2 - j) for j = 0..(n-1)/2
  for (int n : {3, 5, 7, 9}) {
    const CirculantReport r = circulant_formula_report(n);
    for (int j = 0; j <= (n - 1) / 2; ++j) {
      const auto f = circulant_closed_form(n, (n + 1) / 2 - j);
      REQUIRE(f);
      REQUIRE(f->is_integer());
      CHECK(static_cast<std::uint64_t>(f->num) == *r.rows[static_cast<std::size_t>(j)].d_direct);
    }
  }
  // even orders: some circulant X-rays are not binary
  const CirculantReport r4 = circulant_formula_report(4);
  bool non_binary = false;
  for (const auto& row : r4.rows) non_binary = non_binary || !row.d_direct;
  CHECK(non_binary);
  CHECK_THROWS_AS(circulant_formula_report(23), LimitExceeded);
}

TEST_CASE("{0,2} X-rays") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> brute;
    for (const auto& [w, members] : oracle::classes(n))
      if (w.find_first_not_of("02") == std::string::npos) brute.insert(w);
    std::set<std::string> got;
    for (const auto& w : zero_two_xrays(n)) got.insert(format_word(w));
    CHECK(got == brute);
    CHECK(count_zero_two_xrays(n) == brute.size());
  }
  CHECK(count_zero_two_xrays(7) == 0);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(enumerate_binary(13), LimitExceeded);
  CHECK_THROWS_AS(conjecture1_check(13), LimitExceeded);
}

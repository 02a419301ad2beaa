#include "doctest.h"
#include "oracles.hpp"
#include "permxray/degeneracy.hpp"
#include "permxray/error.hpp"
#include "permxray/published.hpp"

using namespace permxray;

TEST_CASE("distinct X-ray counts match brute force and the published column") {
  for (const auto& row : published::xray_counts()) {
    const auto oracle_count = row.n <= 7 ? oracle::classes(row.n).size() : row.x_n;
    CHECK(count_distinct_xrays(row.n) == oracle_count);
    CHECK(count_distinct_xrays(row.n) == row.x_n);
  }
}

TEST_CASE("enumerate_classes matches the brute-force partition for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto ref = oracle::classes(n);
    const DegeneracyReport r = enumerate_classes(n);
    REQUIRE(r.distinct() == ref.size());
    for (const auto& [w, members] : ref) {
      const DegeneracyClass* c = r.find(parse_word(w));
      REQUIRE(c != nullptr);
      REQUIRE(c->size == members.size());
      REQUIRE(c->members.size() == members.size());
      for (std::size_t i = 0; i < members.size(); ++i) REQUIRE(c->members[i] == Permutation(members[i]));
    }
    CHECK(r.histogram == oracle::histogram(n));
    CHECK(r.total() == factorial(n));
  }
}

TEST_CASE("threaded sweeps give identical reports") {
  for (unsigned threads : {0u, 2u, 3u, 8u}) {
    const auto a = enumerate_classes(7, {10, 1});
    const auto b = enumerate_classes(7, {10, threads});
    REQUIRE(a.histogram == b.histogram);
    REQUIRE(a.classes.size() == b.classes.size());
    auto ia = a.classes.begin();
    for (auto ib = b.classes.begin(); ib != b.classes.end(); ++ia, ++ib) {
      REQUIRE(ia->first == ib->first);
      REQUIRE(ia->second.members == ib->second.members);
    }
  }
}

TEST_CASE("histograms n = 2..5 match the published lines") {
  for (int n = 2; n <= 5; ++n) {
    const auto& printed = published::degeneracy_histograms().at(n);
    const auto r = enumerate_classes(n, {10, 1}, false);
    CHECK(std::vector<std::pair<std::uint64_t, std::uint64_t>>(r.histogram.begin(), r.histogram.end()) == printed);
  }
}

TEST_CASE("histogram identities for n = 6, 7") {
  for (int n = 6; n <= 7; ++n) {
    const auto r = enumerate_classes(n, {10, 4}, false);
    std::uint64_t classes = 0;
    for (auto [a, b] : r.histogram) classes += b;
    CHECK(r.total() == factorial(n));
    CHECK(classes == count_distinct_xrays(n));
  }
}

TEST_CASE("x_max closed form equals the brute-force argmax") {
  for (const auto& row : published::xray_counts()) {
    const auto r = enumerate_classes(row.n, {10, 2}, false);
    const MaxDegeneracy m = max_degeneracy(r);
    std::vector<std::string> words;
    for (const auto& w : m.words) words.push_back(format_word(w));
    CHECK(words == row.xmax_words);
    CHECK(m.delta == row.xmax_delta);
    if (row.n >= 3) {
      REQUIRE(m.words.size() == 1);
      const Xray built = build_xmax(row.n);
      CHECK(Word(built.word().begin(), built.word().end()) == m.words[0]);
      CHECK(delta_of(built) == row.xmax_delta);
    }
  }
  CHECK_THROWS_AS(build_xmax(2), Undefined);
  CHECK(build_xmax(7).to_string() == "0001111111000");
}

TEST_CASE("delta_of") {
  CHECK(delta_of(parse_word("001111100")) == 6);
  CHECK(delta_of(parse_word("01110")) == 2);
  Word w(7, 0);
  w[0] = 4;
  CHECK(delta_of(w) == 0);
  CHECK_THROWS_AS(delta_of(parse_word("0110")), InvalidXray);
  CHECK_THROWS_AS(delta_of(parse_word(std::string(21, '0'))), LimitExceeded);
}

TEST_CASE("difference multisets") {
  CHECK(difference_multiset(Permutation::parse("2413")).entries == std::vector<int>{-2, -1, 1, 2});
  CHECK(difference_multiset(Permutation::identity(5)).entries == std::vector<int>(5, 0));
  for (int n = 1; n <= 8; ++n) {
    const auto c = check_multiset_bijection(n, {10, 2});
    CHECK(c.partitions_equal);
    CHECK(c.distinct_multisets == c.distinct_xrays);
  }
  // pairing x(p) with M(p) itself does not give the same partition
  CHECK(xray(Permutation::parse("231")) == xray(Permutation::parse("312")));
  CHECK(difference_multiset(Permutation::parse("231")) != difference_multiset(Permutation::parse("312")));
}

TEST_CASE("entry-wise sum identity") {
  for (int n = 2; n <= 8; ++n) CHECK(entrywise_sum(n) == entrywise_sum_closed_form(n));
  CHECK(entrywise_sum(3) == std::vector<std::uint64_t>{2, 4, 6, 4, 2});
  CHECK(entrywise_sum(2) == std::vector<std::uint64_t>{1, 2, 1});
  CHECK(entrywise_sum(5)[4] == 120);
  // direct oracle summation of materialized X-rays
  std::vector<std::uint64_t> sum(11, 0);
  for (const auto& v : oracle::all_perms(6)) {
    const auto x = oracle::xray(v);
    for (std::size_t k = 0; k < x.size(); ++k) sum[k] += static_cast<std::uint64_t>(x[k]);
  }
  CHECK(entrywise_sum(6) == sum);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(enumerate_classes(11), LimitExceeded);
  CHECK_THROWS_AS(count_distinct_xrays(9, {8, 1}), LimitExceeded);
  CHECK_THROWS_AS(enumerate_classes(0), InvalidArgument);
}

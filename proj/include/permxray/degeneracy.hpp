#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "permxray/permutation.hpp"
#include "permxray/sweep.hpp"

namespace permxray {

struct DegeneracyClass {
  Word word;
  std::uint64_t size = 0;
  // Lexicographic; empty when the report was built without members.
  std::vector<Permutation> members;
};

// S_n partitioned by X-ray.
struct DegeneracyReport {
  int n = 0;
  bool has_members = false;
  // Keyed by the serialized X-ray word.
  std::map<std::string, DegeneracyClass> classes;
  // class size a -> number of classes b with that size
  std::map<std::uint64_t, std::uint64_t> histogram;

  std::uint64_t distinct() const { return classes.size(); }
  // sum of a*b; equals n! for a complete report
  std::uint64_t total() const;
  const DegeneracyClass* find(const Word& word) const;
};

DegeneracyReport enumerate_classes(int n, const SweepOptions& opts = {}, bool keep_members = true);

// x_n, the number of distinct X-rays over S_n.
std::uint64_t count_distinct_xrays(int n, const SweepOptions& opts = {});

struct DifferenceMultiset {
  int n = 0;
  // sorted i - p(i)
  std::vector<int> entries;
  auto operator<=>(const DifferenceMultiset&) const = default;
};

DifferenceMultiset difference_multiset(const Permutation& p);

// Outcome of checking that x(p) and M(column_reverse(p)) determine each other,
// so grouping S_n by X-ray and by that multiset gives the same partition and
// x_n equals the number of distinct difference multisets.
struct MultisetBijectionCheck {
  int n = 0;
  std::uint64_t distinct_xrays = 0;
  std::uint64_t distinct_multisets = 0;
  bool partitions_equal = false;
};

MultisetBijectionCheck check_multiset_bijection(int n, const SweepOptions& opts = {});

// Closed-form maximum-degeneracy word; Undefined for n <= 2.
Xray build_xmax(int n);

struct MaxDegeneracy {
  std::uint64_t delta = 0;
  std::vector<Word> words;  // every word attaining delta, in key order
};

MaxDegeneracy max_degeneracy(const DegeneracyReport& report);

// Brute-force count of permutations whose X-ray equals word; order is taken
// from the (odd) word length. Unrealizable words give 0.
std::uint64_t delta_of(const Word& word, const SweepOptions& opts = {});
std::uint64_t delta_of(const Xray& x, const SweepOptions& opts = {});

// Entry-wise sum of all X-rays of S_n.
std::vector<std::uint64_t> entrywise_sum(int n, const SweepOptions& opts = {});
// ((n-1)!, 2(n-1)!, ..., n!, ..., (n-1)!)
std::vector<std::uint64_t> entrywise_sum_closed_form(int n);

std::uint64_t factorial(int n);

}  // namespace permxray

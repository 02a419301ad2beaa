#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permxray/permutation.hpp"
#include "permxray/sweep.hpp"

namespace permxray {

struct Block {
  int start = 0;   // 1-based position
  int length = 0;
  auto operator<=>(const Block&) const = default;
};

// Segments of length strictly between 1 and n whose values form a range,
// ordered by (start, length).
std::vector<Block> find_blocks(const Permutation& p);
bool is_simple(const Permutation& p);

// skeleton[parts...]: the block matrix with P_{parts[i]} at block (i, skeleton(i)).
struct Inflation {
  Permutation skeleton;
  std::vector<Permutation> parts;

  // Throws InvalidArgument on a size mismatch or when every part has order 1.
  void validate() const;
};

Permutation inflate(const Inflation& infl);
Permutation direct_sum(const Permutation& a, const Permutation& b);

// A permutation other than sigma and sigma^{-1} sharing the X-ray of
// sigma = inflate(infl), obtained by inverting non-involution parts.
// nullopt when the inflation meets neither sufficient condition.
std::optional<Permutation> prop3_witness(const Inflation& infl);

struct AdjacentNonzeroReport {
  int n = 0;
  // delta = 1 words with a run of >= 3 nonzero entries
  std::vector<Word> violations;
  // words with no run longer than 2 but delta > 1
  std::vector<Word> converse_failures;
};

int longest_nonzero_run(std::span<const int> word);
AdjacentNonzeroReport adjacent_nonzero_conjecture(int n, const SweepOptions& opts = {});

// 3 x m, rows listed top to bottom; the first row is -(m-1)/2..(m-1)/2 ascending.
using ZeroSumArray = std::array<std::vector<int>, 3>;

std::vector<ZeroSumArray> enumerate_zero_sum_arrays(int m, int max_m = 9);
std::uint64_t count_zero_sum_arrays(int m, int max_m = 9);

// l_n: permutations with a palindromic X-ray.
std::uint64_t count_palindromic(int n, const SweepOptions& opts = {});
// l_{n,A=D}: diagonal X-ray equals X-ray, and the X-ray is a palindrome.
std::uint64_t count_diag_eq_antidiag_palindromic(int n, const SweepOptions& opts = {});
bool is_diag_eq_antidiag_palindromic(const Permutation& p);
// r_n: fixed points of p -> inverse(reverse(p)).
std::uint64_t count_reverse_inverse_invariant(int n, const SweepOptions& opts = {});
bool is_reverse_inverse_invariant(const Permutation& p);

struct Prop5Witness {
  // rho (+) rho^{-1}: non-involution with palindromic diagonal X-ray
  Permutation block_sum;
  // column reversal of block_sum: palindromic X-ray, and not the column
  // reversal of any involution
  Permutation witness;
  bool witness_is_involution = false;
};

// Throws IsInvolution when rho is an involution.
Prop5Witness prop5_witness(const Permutation& rho);

}  // namespace permxray

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permxray/permutation.hpp"
#include "permxray/sweep.hpp"

namespace permxray {

inline constexpr SweepOptions kBinaryDefaults{12, 1};

// Integer point (x_1..x_n) with x_1+..+x_i >= i^2, x_1+..+x_n = n^2 and
// x_{i+1} >= x_i + 1.
struct LatticePoint {
  int n = 0;
  std::vector<int> coords;

  bool satisfies_constraints() const;
  std::string to_string() const;
  auto operator<=>(const LatticePoint&) const = default;
};

// (p_0..p_n) with p_0 = p_n = 0, p_i >= 0 and 2p_i - p_{i+1} - p_{i-1} <= 1.
struct ScorePoint {
  int n = 0;
  std::vector<int> p;

  bool satisfies_constraints() const;
  auto operator<=>(const ScorePoint&) const = default;
};

// p_i = x_1 + .. + x_i - i^2 and back.
LatticePoint to_lattice(const ScorePoint& s);
ScorePoint to_score(const LatticePoint& x);

struct BinaryXrays {
  int n = 0;
  // |B_n|, permutations whose X-ray has no entry above 1
  std::uint64_t permutations = 0;
  // distinct binary words, lexicographic
  std::vector<Word> words;
};

// Backtracking over columns and antidiagonals, NW-SE diagonals left free.
BinaryXrays enumerate_binary(int n, const SweepOptions& opts = kBinaryDefaults);

// Sorted (p(1), p(2)+1, .., p(n)+n-1): the positions of the 1s in x(p).
// Throws NonBinaryXray when x(p) has an entry >= 2.
LatticePoint positions(const Permutation& p);

std::vector<LatticePoint> enumerate_lattice_points(int n, const SweepOptions& opts = kBinaryDefaults);

struct Conjecture1Report {
  int n = 0;
  std::uint64_t b_n = 0;
  std::uint64_t lattice_count = 0;
  // positions() never maps two different words to the same point
  bool injective = true;
  // every positions() image satisfies the lattice constraints
  bool in_polytope = true;
  // lattice points missed by the image
  std::vector<LatticePoint> gaps;

  bool holds() const { return injective && in_polytope && gaps.empty(); }
};

Conjecture1Report conjecture1_check(int n, const SweepOptions& opts = kBinaryDefaults);

// c_n^k: i -> ((i + k - 1) mod n) + 1
Permutation circulant(int n, int k);

// Exact rational with a small denominator.
struct Fraction {
  __int128 num = 0;
  __int128 den = 1;

  bool is_integer() const { return den == 1; }
  std::string to_string() const;
  bool operator==(const Fraction&) const = default;
};

// The four-power-of-two expression for d(c_n^k); nullopt for even n.
std::optional<Fraction> circulant_closed_form(int n, int k);
// The factored line a(k)(2^n-1)(2^n-1)2^{n/2-k+1/2} evaluated literally; nullopt for even n.
std::optional<Fraction> circulant_factored_form(int n, int k);

struct CirculantRow {
  int k = 0;
  Permutation perm;
  Word word;
  std::optional<std::uint64_t> d_direct;  // nullopt when the X-ray is not binary
  std::optional<Fraction> d_formula;
  std::optional<Fraction> d_factored;
  bool matches = false;  // d_formula == d_direct
};

struct CirculantReport {
  int n = 0;
  std::vector<CirculantRow> rows;
  // formula index k -> direct indices k' with d_direct(k') == d_formula(k)
  std::vector<std::vector<int>> index_map;
  // some relabelling of k makes the two lists agree
  bool agrees_up_to_reindexing = false;
  std::uint64_t mismatches = 0;
};

CirculantReport circulant_formula_report(int n, int max_n = 21);

// Distinct X-rays over S_n whose entries are all 0 or 2 (0 for odd n).
std::uint64_t count_zero_two_xrays(int n, const SweepOptions& opts = kBinaryDefaults);
std::vector<Word> zero_two_xrays(int n, const SweepOptions& opts = kBinaryDefaults);

// Lattice points of the score-sequence polytope, counted in p-coordinates.
std::uint64_t score_sequences(int n, const SweepOptions& opts = kBinaryDefaults);
std::vector<ScorePoint> enumerate_score_points(int n, const SweepOptions& opts = kBinaryDefaults);

}  // namespace permxray

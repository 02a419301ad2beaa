#pragma once

// Values as printed in the literature this library reproduces, including
// cells that the exhaustive enumerations show to be misprinted. They are
// reference data for diffs, never inputs to a computation.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace permxray::published {

struct XrayCountRow {
  int n;
  std::uint64_t x_n;
  std::vector<std::string> xmax_words;
  std::uint64_t xmax_delta;
};

// n = 1..8
const std::vector<XrayCountRow>& xray_counts();

// Degeneracy histogram lines C(n), n = 2..7, as (class size, class count) in
// printed order. C(6) ends in a misprinted "2(1)"; the C(7) line is missing
// entries.
const std::map<int, std::vector<std::pair<std::uint64_t, std::uint64_t>>>& degeneracy_histograms();

// l_n, n = 2..9
const std::map<int, std::uint64_t>& palindromic_counts();

struct CirculantRow {
  std::string perm;
  std::string word;
  std::uint64_t d;
};

// circulant X-ray table for n = 3 and 5
const std::map<int, std::vector<CirculantRow>>& circulant_table();

inline constexpr std::uint64_t kReverseInverseInvariant9 = 12;
inline constexpr std::uint64_t kDiagEqAntidiagPalindromic9 = 20;

}  // namespace permxray::published

#include "permxray/published.hpp"

namespace permxray::published {

const std::vector<XrayCountRow>& xray_counts() {
  static const std::vector<XrayCountRow> rows = {
      {1, 1, {"1"}, 1},
      {2, 2, {"020", "101"}, 1},
      {3, 5, {"01110"}, 2},
      {4, 16, {"0012100"}, 3},
      {5, 59, {"001111100"}, 6},
      {6, 246, {"00011211000"}, 12},
      {7, 1105, {"0001111111000"}, 28},
      {8, 5270, {"000011121110000"}, 76},
  };
  return rows;
}

const std::map<int, std::vector<std::pair<std::uint64_t, std::uint64_t>>>& degeneracy_histograms() {
  static const std::map<int, std::vector<std::pair<std::uint64_t, std::uint64_t>>> table = {
      {2, {{1, 2}}},
      {3, {{1, 4}, {2, 1}}},
      {4, {{1, 9}, {2, 6}, {3, 1}}},
      {5, {{1, 20}, {2, 26}, {3, 6}, {4, 6}, {6, 1}}},
      {6, {{1, 49}, {2, 100}, {3, 19}, {4, 43}, {5, 1}, {6, 19}, {7, 2}, {8, 11}, {9, 1}, {2, 1}}},
      {7, {{1, 114}, {2, 345}, {3, 60}, {4, 229}, {5, 18}, {6, 118}, {7, 11}, {8, 98}, {10, 29}, {11, 2},
           {12, 33}, {14, 13}, {16, 14}, {18, 6}, {20, 4}, {21, 1}, {22, 2}, {26, 1}, {28, 1}}},
  };
  return table;
}

const std::map<int, std::uint64_t>& palindromic_counts() {
  static const std::map<int, std::uint64_t> table = {
      {2, 2}, {3, 4}, {4, 12}, {5, 32}, {6, 128}, {7, 436}, {8, 2110}, {9, 8814},
  };
  return table;
}

const std::map<int, std::vector<CirculantRow>>& circulant_table() {
  static const std::map<int, std::vector<CirculantRow>> table = {
      {3, {{"123", "10101", 21}, {"231", "01110", 14}}},
      {5, {{"12345", "101010101", 341}, {"23451", "010111010", 186}, {"34512", "001111100", 124}}},
  };
  return table;
}

}  // namespace permxray::published

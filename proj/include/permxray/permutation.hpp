#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permxray {

// A candidate X-ray word: entries k = 1..2n-1 stored at index k-1.
using Word = std::vector<int>;

// Permutation of [n] in one-line notation with 1-based values.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless values is a bijection on 1..values.size().
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  // Digit string ("73142865", n <= 9) or comma list ("10,2,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  // Value at 1-based position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const { return values_; }

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

enum class XrayKind { antidiagonal, diagonal };

// Length-(2n-1) word of antidiagonal or diagonal sums of a permutation matrix.
class Xray {
 public:
  // Validates length 2n-1, sum n and the per-line capacity min(k, 2n-k).
  Xray(int n, Word word, XrayKind kind = XrayKind::antidiagonal);

  // Order is inferred from the word length, which must be odd.
  static Xray parse(std::string_view text, XrayKind kind = XrayKind::antidiagonal);

  int order() const { return n_; }
  std::span<const int> word() const { return word_; }
  XrayKind kind() const { return kind_; }
  int operator[](int k) const { return word_[static_cast<std::size_t>(k - 1)]; }

  bool is_binary() const;
  bool is_palindrome() const;
  std::string to_string() const;

  bool operator==(const Xray&) const = default;

 private:
  int n_ = 0;
  Word word_;
  XrayKind kind_ = XrayKind::antidiagonal;
};

// Capacity of line k (1-based) in an n x n matrix.
constexpr int line_capacity(int n, int k) { return k < 2 * n - k ? k : 2 * n - k; }

// Antidiagonal sums of a raw one-line permutation into out (size 2n-1, zeroed here).
inline void fill_xray(std::span<const int> values, std::span<int> out) {
  for (int& e : out) e = 0;
  for (std::size_t i = 0; i < values.size(); ++i) ++out[i + static_cast<std::size_t>(values[i]) - 1];
}

// Diagonal sums; line k holds the cells with p(i) - i = k - n.
inline void fill_diagonal_xray(std::span<const int> values, std::span<int> out) {
  const int n = static_cast<int>(values.size());
  for (int& e : out) e = 0;
  for (int i = 1; i <= n; ++i) ++out[static_cast<std::size_t>(values[i - 1] - i + n - 1)];
}

Xray xray(const Permutation& p);
Xray diagonal_xray(const Permutation& p);

Permutation inverse(const Permutation& p);
// Values read right to left; mirrors the rows of the matrix.
Permutation reverse(const Permutation& p);
Xray reverse_xray(const Xray& x);
// Mirrors the matrix columns: i -> n+1-p(i).
Permutation column_reverse(const Permutation& p);
// Mirrors the matrix rows; identical to reverse.
Permutation row_reverse(const Permutation& p);

bool is_involution(const Permutation& p);
bool is_identity(const Permutation& p);

// Binary numeral value of a 0/1 word, first entry most significant.
// Throws NonBinaryXray on an entry > 1 and LimitExceeded above 64 entries.
std::uint64_t decimal_expansion(std::span<const int> word);
std::uint64_t decimal_expansion(const Xray& x);

Word parse_word(std::string_view text);
// Digit string when every entry is <= 9, otherwise comma separated.
std::string format_word(std::span<const int> word);
bool is_palindrome(std::span<const int> word);

}  // namespace permxray

#include "permxray/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "permxray/error.hpp"

namespace permxray {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  if (text.empty()) throw ParseError(std::string("empty ") + what);
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(std::string("bad character in ") + what + ": '" + c + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
      throw ParseError(std::string("bad entry in ") + what + ": '" + std::string(tok) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::string format_ints(std::span<const int> xs, bool digits) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n == 0) throw InvalidPermutation("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InvalidPermutation("not a permutation of 1.." + std::to_string(n) + ": " +
                               format_ints(values_, false));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidPermutation("order must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  try {
    return Permutation(parse_int_list(text, "permutation"));
  } catch (const ParseError& e) {
    throw InvalidPermutation(e.what());
  }
}

std::string Permutation::to_string() const { return format_ints(values_, size() <= 9); }

Xray::Xray(int n, Word word, XrayKind kind) : n_(n), word_(std::move(word)), kind_(kind) {
  if (n < 1) throw InvalidXray("order must be positive");
  if (word_.size() != static_cast<std::size_t>(2 * n - 1))
    throw InvalidXray("word length " + std::to_string(word_.size()) + " != 2n-1 = " +
                      std::to_string(2 * n - 1));
  int total = 0;
  for (int k = 1; k <= 2 * n - 1; ++k) {
    const int e = word_[static_cast<std::size_t>(k - 1)];
    if (e < 0 || e > line_capacity(n, k))
      throw InvalidXray("entry " + std::to_string(k) + " out of range: " + std::to_string(e));
    total += e;
  }
  if (total != n) throw InvalidXray("entries sum to " + std::to_string(total) + ", expected " + std::to_string(n));
}

Xray Xray::parse(std::string_view text, XrayKind kind) {
  Word w = parse_word(text);
  if (w.size() % 2 == 0) throw InvalidXray("word length " + std::to_string(w.size()) + " is even");
  const int n = static_cast<int>(w.size() + 1) / 2;
  return Xray(n, std::move(w), kind);
}

bool Xray::is_binary() const {
  return std::all_of(word_.begin(), word_.end(), [](int e) { return e <= 1; });
}

bool Xray::is_palindrome() const { return permxray::is_palindrome(word_); }

std::string Xray::to_string() const { return format_word(word_); }

Xray xray(const Permutation& p) {
  Word w(static_cast<std::size_t>(2 * p.size() - 1));
  fill_xray(p.values(), w);
  return Xray(p.size(), std::move(w), XrayKind::antidiagonal);
}

Xray diagonal_xray(const Permutation& p) {
  Word w(static_cast<std::size_t>(2 * p.size() - 1));
  fill_diagonal_xray(p.values(), w);
  return Xray(p.size(), std::move(w), XrayKind::diagonal);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(q));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> q(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(q));
}

Xray reverse_xray(const Xray& x) {
  Word w(x.word().rbegin(), x.word().rend());
  return Xray(x.order(), std::move(w), x.kind());
}

Permutation column_reverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(i - 1)] = p.size() + 1 - p(i);
  return Permutation(std::move(q));
}

Permutation row_reverse(const Permutation& p) { return reverse(p); }

bool is_involution(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(p(i)) != i) return false;
  return true;
}

bool is_identity(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) != i) return false;
  return true;
}

std::uint64_t decimal_expansion(std::span<const int> word) {
  if (word.size() > 64) throw LimitExceeded("decimal_expansion word length", static_cast<int>(word.size()), 64);
  std::uint64_t d = 0;
  for (int e : word) {
    if (e < 0 || e > 1) throw NonBinaryXray("word " + format_word(word) + " is not binary");
    d = (d << 1) | static_cast<std::uint64_t>(e);
  }
  return d;
}

std::uint64_t decimal_expansion(const Xray& x) { return decimal_expansion(x.word()); }

Word parse_word(std::string_view text) {
  try {
    return parse_int_list(text, "word");
  } catch (const ParseError& e) {
    throw InvalidXray(e.what());
  }
}

std::string format_word(std::span<const int> word) {
  const bool digits = std::all_of(word.begin(), word.end(), [](int e) { return e >= 0 && e <= 9; });
  return format_ints(word, digits);
}

bool is_palindrome(std::span<const int> word) {
  return std::equal(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(word.size() / 2), word.rbegin());
}

}  // namespace permxray

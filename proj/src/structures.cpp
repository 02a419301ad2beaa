#include "permxray/structures.hpp"

#include <algorithm>

#include "permxray/degeneracy.hpp"
#include "permxray/error.hpp"

namespace permxray {

namespace {

void check_limit(const char* what, int n, const SweepOptions& opts) {
  if (n < 1) throw InvalidArgument(std::string(what) + ": order must be positive");
  if (n > opts.max_n) throw LimitExceeded(what, n, opts.max_n);
  if (n > 32) throw LimitExceeded(what, n, 32);
}

template <class Pred>
std::uint64_t count_matching(int n, const SweepOptions& opts, Pred pred) {
  auto parts = sweep_by_first_value(n, opts.threads, std::uint64_t{0},
                                    [&](std::span<const int> values, std::uint64_t& acc) {
                                      if (pred(values)) ++acc;
                                    });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

bool palindromic_values(std::span<const int> values) {
  int buf[64];
  std::span<int> w(buf, 2 * values.size() - 1);
  fill_xray(values, w);
  return is_palindrome(w);
}

bool diag_eq_antidiag_palindromic_values(std::span<const int> values) {
  int a[64];
  int d[64];
  const std::size_t len = 2 * values.size() - 1;
  std::span<int> aw(a, len), dw(d, len);
  fill_xray(values, aw);
  fill_diagonal_xray(values, dw);
  return std::equal(aw.begin(), aw.end(), dw.begin()) && is_palindrome(aw);
}

bool reverse_inverse_invariant_values(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  // inverse(reverse(p)) = p  <=>  p(p(n+1-i)) = i
  for (int i = 1; i <= n; ++i)
    if (values[static_cast<std::size_t>(values[static_cast<std::size_t>(n - i)] - 1)] != i) return false;
  return true;
}

}  // namespace

std::vector<Block> find_blocks(const Permutation& p) {
  std::vector<Block> out;
  const int n = p.size();
  for (int start = 1; start <= n; ++start) {
    int lo = p(start);
    int hi = p(start);
    for (int end = start + 1; end <= n; ++end) {
      lo = std::min(lo, p(end));
      hi = std::max(hi, p(end));
      const int length = end - start + 1;
      if (length >= n) break;
      if (hi - lo + 1 == length) out.push_back({start, length});
    }
  }
  return out;
}

bool is_simple(const Permutation& p) { return find_blocks(p).empty(); }

void Inflation::validate() const {
  if (skeleton.size() == 0) throw InvalidArgument("inflation: empty skeleton");
  if (parts.size() != static_cast<std::size_t>(skeleton.size()))
    throw InvalidArgument("inflation: skeleton of order " + std::to_string(skeleton.size()) + " needs that many parts, got " +
                          std::to_string(parts.size()));
  if (std::none_of(parts.begin(), parts.end(), [](const Permutation& q) { return q.size() > 1; }))
    throw InvalidArgument("inflation: at least one part must have order > 1");
}

Permutation inflate(const Inflation& infl) {
  infl.validate();
  const int k = infl.skeleton.size();
  // column block j is as wide as the part sent to it
  std::vector<int> width(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) width[static_cast<std::size_t>(infl.skeleton(i))] = infl.parts[static_cast<std::size_t>(i - 1)].size();
  std::vector<int> col_offset(static_cast<std::size_t>(k) + 1, 0);
  for (int j = 2; j <= k; ++j)
    col_offset[static_cast<std::size_t>(j)] = col_offset[static_cast<std::size_t>(j - 1)] + width[static_cast<std::size_t>(j - 1)];
  std::vector<int> values;
  for (int i = 1; i <= k; ++i) {
    const Permutation& part = infl.parts[static_cast<std::size_t>(i - 1)];
    const int offset = col_offset[static_cast<std::size_t>(infl.skeleton(i))];
    for (int t = 1; t <= part.size(); ++t) values.push_back(offset + part(t));
  }
  return Permutation(std::move(values));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v(a.values().begin(), a.values().end());
  for (int x : b.values()) v.push_back(x + a.size());
  return Permutation(std::move(v));
}

std::optional<Permutation> prop3_witness(const Inflation& infl) {
  infl.validate();
  std::vector<std::size_t> movable;
  for (std::size_t i = 0; i < infl.parts.size(); ++i)
    if (!is_involution(infl.parts[i])) movable.push_back(i);
  const bool identity_skeleton = is_identity(infl.skeleton);
  if (movable.empty() || (identity_skeleton && movable.size() < 2)) return std::nullopt;

  const Permutation sigma = inflate(infl);
  const Permutation sigma_inv = inverse(sigma);
  const Xray target = xray(sigma);
  auto accept = [&](const Inflation& cand) -> std::optional<Permutation> {
    Permutation rho = inflate(cand);
    if (rho != sigma && rho != sigma_inv && xray(rho) == target) return rho;
    return std::nullopt;
  };

  // Inverting a single part keeps every block's antidiagonal profile; with an
  // identity skeleton another non-involution part stays untouched, so the
  // result is not sigma^{-1}.
  for (std::size_t i : movable) {
    Inflation cand = infl;
    cand.parts[i] = inverse(cand.parts[i]);
    if (auto rho = accept(cand)) return rho;
  }
  for (std::size_t a = 0; a < movable.size(); ++a)
    for (std::size_t b = a + 1; b < movable.size(); ++b) {
      Inflation cand = infl;
      cand.parts[movable[a]] = inverse(cand.parts[movable[a]]);
      cand.parts[movable[b]] = inverse(cand.parts[movable[b]]);
      if (auto rho = accept(cand)) return rho;
    }
  return std::nullopt;
}

int longest_nonzero_run(std::span<const int> word) {
  int best = 0;
  int run = 0;
  for (int e : word) {
    run = e != 0 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

AdjacentNonzeroReport adjacent_nonzero_conjecture(int n, const SweepOptions& opts) {
  const DegeneracyReport report = enumerate_classes(n, opts, false);
  AdjacentNonzeroReport r;
  r.n = n;
  for (const auto& [key, cls] : report.classes) {
    const int run = longest_nonzero_run(cls.word);
    if (cls.size == 1 && run >= 3) r.violations.push_back(cls.word);
    if (cls.size > 1 && run <= 2) r.converse_failures.push_back(cls.word);
  }
  return r;
}

std::vector<ZeroSumArray> enumerate_zero_sum_arrays(int m, int max_m) {
  if (m < 1 || m % 2 == 0) throw InvalidArgument("zero-sum arrays need an odd positive width");
  if (m > max_m) throw LimitExceeded("enumerate_zero_sum_arrays", m, max_m);
  const int h = (m - 1) / 2;
  std::vector<ZeroSumArray> out;
  ZeroSumArray cur;
  for (auto& row : cur) row.assign(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) cur[0][static_cast<std::size_t>(j)] = j - h;
  std::vector<bool> used2(static_cast<std::size_t>(m), false), used3(static_cast<std::size_t>(m), false);
  auto rec = [&](auto& self, int col) -> void {
    if (col == m) {
      out.push_back(cur);
      return;
    }
    const int top = cur[0][static_cast<std::size_t>(col)];
    for (int v = -h; v <= h; ++v) {
      const int w = -(top + v);
      if (w < -h || w > h) continue;
      const auto iv = static_cast<std::size_t>(v + h), iw = static_cast<std::size_t>(w + h);
      if (used2[iv] || used3[iw]) continue;
      used2[iv] = used3[iw] = true;
      cur[1][static_cast<std::size_t>(col)] = v;
      cur[2][static_cast<std::size_t>(col)] = w;
      self(self, col + 1);
      used2[iv] = used3[iw] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t count_zero_sum_arrays(int m, int max_m) { return enumerate_zero_sum_arrays(m, max_m).size(); }

std::uint64_t count_palindromic(int n, const SweepOptions& opts) {
  check_limit("count_palindromic", n, opts);
  return count_matching(n, opts, palindromic_values);
}

std::uint64_t count_diag_eq_antidiag_palindromic(int n, const SweepOptions& opts) {
  check_limit("count_diag_eq_antidiag_palindromic", n, opts);
  return count_matching(n, opts, diag_eq_antidiag_palindromic_values);
}

bool is_diag_eq_antidiag_palindromic(const Permutation& p) { return diag_eq_antidiag_palindromic_values(p.values()); }

std::uint64_t count_reverse_inverse_invariant(int n, const SweepOptions& opts) {
  check_limit("count_reverse_inverse_invariant", n, opts);
  return count_matching(n, opts, reverse_inverse_invariant_values);
}

bool is_reverse_inverse_invariant(const Permutation& p) { return reverse_inverse_invariant_values(p.values()); }

Prop5Witness prop5_witness(const Permutation& rho) {
  if (is_involution(rho)) throw IsInvolution(rho.to_string() + " is an involution");
  Prop5Witness w;
  w.block_sum = direct_sum(rho, inverse(rho));
  w.witness = column_reverse(w.block_sum);
  w.witness_is_involution = is_involution(w.witness);
  return w;
}

}  // namespace permxray

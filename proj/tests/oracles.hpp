#pragma once

// Brute-force reference implementations used only by the tests. They work
// from the definitions directly (materialized matrices, std::next_permutation,
// exhaustive subsets) and share no code with the library's search routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Matrix matrix(const Perm& p) {
  const std::size_t n = p.size();
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][static_cast<std::size_t>(p[i] - 1)] = 1;
  return m;
}

// Line k (1-based) holds the cells (r, c) with r + c = k + 1.
inline std::vector<int> antidiagonal_sums(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> out(static_cast<std::size_t>(2 * n - 1), 0);
  for (int k = 1; k <= 2 * n - 1; ++k)
    for (int r = 1; r <= n; ++r) {
      const int c = k + 1 - r;
      if (c >= 1 && c <= n) out[static_cast<std::size_t>(k - 1)] += m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    }
  return out;
}

// Line k holds the cells with c - r = k - n.
inline std::vector<int> diagonal_sums(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> out(static_cast<std::size_t>(2 * n - 1), 0);
  for (int k = 1; k <= 2 * n - 1; ++k)
    for (int r = 1; r <= n; ++r) {
      const int c = r + k - n;
      if (c >= 1 && c <= n) out[static_cast<std::size_t>(k - 1)] += m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    }
  return out;
}

inline std::vector<int> xray(const Perm& p) { return antidiagonal_sums(matrix(p)); }
inline std::vector<int> dxray(const Perm& p) { return diagonal_sums(matrix(p)); }

inline std::string word(const std::vector<int>& w) {
  std::string s;
  for (int e : w) s += static_cast<char>('0' + e);
  return s;
}

inline std::string perm_text(const Perm& p) {
  std::string s;
  for (int e : p) s += static_cast<char>('0' + e);
  return s;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return q;
}

inline Perm reverse(Perm p) {
  std::reverse(p.begin(), p.end());
  return p;
}

inline bool is_involution(const Perm& p) { return inverse(p) == p; }

// word -> members (lexicographic)
inline std::map<std::string, std::vector<Perm>> classes(int n) {
  std::map<std::string, std::vector<Perm>> out;
  for (const auto& p : all_perms(n)) out[word(xray(p))].push_back(p);
  return out;
}

// class size -> number of classes
inline std::map<std::uint64_t, std::uint64_t> histogram(int n) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& [w, members] : classes(n)) ++h[members.size()];
  return h;
}

// Involutions by the recurrence i_n = i_{n-1} + (n-1) i_{n-2}.
inline std::uint64_t involutions(int n) {
  std::uint64_t a = 1, b = 1;  // i_0, i_1
  if (n == 0) return 1;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t c = b + static_cast<std::uint64_t>(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

// Score sequences of n-player tournaments by Landau's criterion: a
// nondecreasing s with prefix sums >= C(k,2) and total C(n,2).
inline std::vector<std::vector<int>> landau_scores(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> s;
  auto rec = [&](auto& self, int lo, int sum) -> void {
    const int k = static_cast<int>(s.size());
    if (k == n) {
      if (sum == n * (n - 1) / 2) out.push_back(s);
      return;
    }
    for (int v = lo; v <= n - 1; ++v) {
      if (sum + v < (k + 1) * k / 2) continue;
      s.push_back(v);
      self(self, v, sum + v);
      s.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Lattice points of the position polytope by scanning every n-subset of
// 1..2n-1 (strictly increasing coordinates) and testing the constraints.
inline std::vector<std::vector<int>> lattice_by_subsets(int n) {
  std::vector<std::vector<int>> out;
  const int m = 2 * n - 1;
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  std::fill(pick.begin(), pick.begin() + n, 1);
  do {
    std::vector<int> x;
    for (int i = 0; i < m; ++i)
      if (pick[static_cast<std::size_t>(i)]) x.push_back(i + 1);
    long long sum = 0;
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      sum += x[static_cast<std::size_t>(i - 1)];
      if (sum < static_cast<long long>(i) * i) ok = false;
    }
    if (ok && sum == static_cast<long long>(n) * n) out.push_back(x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// 3 x m zero-sum arrays by brute force over all pairs of row permutations.
inline std::uint64_t zero_sum_arrays(int m) {
  const int h = (m - 1) / 2;
  std::vector<int> base(static_cast<std::size_t>(m));
  std::iota(base.begin(), base.end(), -h);
  std::uint64_t count = 0;
  std::vector<int> r2 = base;
  do {
    std::vector<int> r3(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) r3[static_cast<std::size_t>(j)] = -(base[static_cast<std::size_t>(j)] + r2[static_cast<std::size_t>(j)]);
    std::vector<int> sorted = r3;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == base) ++count;
  } while (std::next_permutation(r2.begin(), r2.end()));
  return count;
}

}  // namespace oracle

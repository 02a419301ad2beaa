#include "permxray/binary.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permxray/error.hpp"

namespace permxray {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

void check_limit(const char* what, int n, const SweepOptions& opts) {
  if (n < 1) throw InvalidArgument(std::string(what) + ": order must be positive");
  if (n > opts.max_n) throw LimitExceeded(what, n, opts.max_n);
  if (n > 32) throw LimitExceeded(what, n, 32);
}

std::string int128_to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string s;
  while (v != 0) {
    const int digit = static_cast<int>(v % 10);
    s += static_cast<char>('0' + (neg ? -digit : digit));
    v /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Fraction make_fraction(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Fraction operator*(const Fraction& a, const Fraction& b) { return make_fraction(a.num * b.num, a.den * b.den); }

// 2^e for any integer e as an exact fraction.
Fraction pow2(int e) { return e >= 0 ? Fraction{i128{1} << e, 1} : Fraction{1, i128{1} << -e}; }

Word word_from_mask(u64 mask, int len) {
  Word w(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) w[static_cast<std::size_t>(k)] = static_cast<int>((mask >> k) & 1);
  return w;
}

// Binary-X-ray permutations of [n]; visit(values, line_mask) for each.
template <class Visit>
void walk_binary(int n, int first_col, Visit& visit) {
  std::vector<int> values(static_cast<std::size_t>(n));
  u64 cols = 0;
  u64 lines = 0;
  auto rec = [&](auto& self, int row) -> void {
    if (row > n) {
      visit(values, lines);
      return;
    }
    const int lo = row == 1 ? first_col : 1;
    const int hi = row == 1 ? first_col : n;
    for (int c = lo; c <= hi; ++c) {
      const u64 cb = u64{1} << (c - 1);
      const u64 lb = u64{1} << (row + c - 2);
      if ((cols & cb) || (lines & lb)) continue;
      cols |= cb;
      lines |= lb;
      values[static_cast<std::size_t>(row - 1)] = c;
      self(self, row + 1);
      cols &= ~cb;
      lines &= ~lb;
    }
  };
  rec(rec, 1);
}

}  // namespace

bool LatticePoint::satisfies_constraints() const {
  if (n < 1 || coords.size() != static_cast<std::size_t>(n)) return false;
  long long sum = 0;
  for (int i = 1; i <= n; ++i) {
    const int x = coords[static_cast<std::size_t>(i - 1)];
    if (i > 1 && x < coords[static_cast<std::size_t>(i - 2)] + 1) return false;
    sum += x;
    if (sum < static_cast<long long>(i) * i) return false;
  }
  return sum == static_cast<long long>(n) * n;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

bool ScorePoint::satisfies_constraints() const {
  if (n < 1 || p.size() != static_cast<std::size_t>(n) + 1) return false;
  if (p.front() != 0 || p.back() != 0) return false;
  for (int i = 1; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (p[u] < 0 || 2 * p[u] - p[u + 1] - p[u - 1] > 1) return false;
  }
  return true;
}

LatticePoint to_lattice(const ScorePoint& s) {
  LatticePoint x;
  x.n = s.n;
  for (int i = 1; i <= s.n; ++i)
    x.coords.push_back(s.p[static_cast<std::size_t>(i)] - s.p[static_cast<std::size_t>(i - 1)] + 2 * i - 1);
  return x;
}

ScorePoint to_score(const LatticePoint& x) {
  ScorePoint s;
  s.n = x.n;
  s.p.push_back(0);
  long long sum = 0;
  for (int i = 1; i <= x.n; ++i) {
    sum += x.coords[static_cast<std::size_t>(i - 1)];
    s.p.push_back(static_cast<int>(sum - static_cast<long long>(i) * i));
  }
  return s;
}

BinaryXrays enumerate_binary(int n, const SweepOptions& opts) {
  check_limit("enumerate_binary", n, opts);
  struct Part {
    u64 perms = 0;
    std::set<u64> masks;
  };
  std::vector<Part> parts(static_cast<std::size_t>(n));
  run_chunks(n, opts.threads, [&](int chunk) {
    Part& part = parts[static_cast<std::size_t>(chunk)];
    auto visit = [&](const std::vector<int>&, u64 lines) {
      ++part.perms;
      part.masks.insert(lines);
    };
    walk_binary(n, chunk + 1, visit);
  });
  BinaryXrays out;
  out.n = n;
  std::set<u64> all;
  for (auto& p : parts) {
    out.permutations += p.perms;
    all.insert(p.masks.begin(), p.masks.end());
  }
  for (u64 m : all) out.words.push_back(word_from_mask(m, 2 * n - 1));
  std::sort(out.words.begin(), out.words.end());
  return out;
}

LatticePoint positions(const Permutation& p) {
  LatticePoint x;
  x.n = p.size();
  for (int i = 1; i <= p.size(); ++i) x.coords.push_back(p(i) + i - 1);
  std::sort(x.coords.begin(), x.coords.end());
  if (std::adjacent_find(x.coords.begin(), x.coords.end()) != x.coords.end())
    throw NonBinaryXray("x(" + p.to_string() + ") is not binary");
  return x;
}

std::vector<LatticePoint> enumerate_lattice_points(int n, const SweepOptions& opts) {
  check_limit("enumerate_lattice_points", n, opts);
  const long long total = static_cast<long long>(n) * n;
  std::vector<LatticePoint> out;
  std::vector<int> coords(static_cast<std::size_t>(n));
  auto rec = [&](auto& self, int i, int prev, long long sum) -> void {
    if (i == n) {
      const long long last = total - sum;
      if (last >= prev + 1) {
        coords[static_cast<std::size_t>(n - 1)] = static_cast<int>(last);
        out.push_back({n, coords});
      }
      return;
    }
    const long long m = n - i;  // coordinates after this one
    const long long lo = std::max<long long>(prev + 1, static_cast<long long>(i) * i - sum);
    const long long hi = (total - sum - m * (m + 1) / 2) / (m + 1);
    for (long long x = lo; x <= hi; ++x) {
      coords[static_cast<std::size_t>(i - 1)] = static_cast<int>(x);
      self(self, i + 1, static_cast<int>(x), sum + x);
    }
  };
  if (n == 1) {
    out.push_back({1, {1}});
    return out;
  }
  rec(rec, 1, 0, 0);
  return out;
}

Conjecture1Report conjecture1_check(int n, const SweepOptions& opts) {
  check_limit("conjecture1_check", n, opts);
  Conjecture1Report r;
  r.n = n;
  // position vector -> word mask of the first permutation that produced it
  std::map<LatticePoint, u64> image;
  std::set<u64> words;
  auto visit = [&](const std::vector<int>& values, u64 lines) {
    const LatticePoint x = positions(Permutation(values));
    if (!x.satisfies_constraints()) r.in_polytope = false;
    auto [it, fresh] = image.emplace(x, lines);
    if (!fresh && it->second != lines) r.injective = false;
    words.insert(lines);
  };
  for (int c = 1; c <= n; ++c) walk_binary(n, c, visit);
  r.b_n = words.size();
  const auto lattice = enumerate_lattice_points(n, opts);
  r.lattice_count = lattice.size();
  for (const auto& pt : lattice)
    if (!image.contains(pt)) r.gaps.push_back(pt);
  return r;
}

Permutation circulant(int n, int k) {
  if (n < 1) throw InvalidArgument("circulant: order must be positive");
  if (k < 0 || k >= n) throw InvalidArgument("circulant: power must be in 0..n-1");
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back((i + k - 1) % n + 1);
  return Permutation(std::move(v));
}

std::string Fraction::to_string() const {
  return is_integer() ? int128_to_string(num) : int128_to_string(num) + "/" + int128_to_string(den);
}

std::optional<Fraction> circulant_closed_form(int n, int k) {
  if (n % 2 == 0) return std::nullopt;
  const int big = (3 * n + 1) / 2;
  const int small = (n + 1) / 2;
  const int a = big + k, b = small + k, c = big - k, d = small - k;
  const int shift = std::max(0, -std::min({a, b, c, d}));
  const i128 num = (i128{1} << (a + shift)) - (i128{1} << (b + shift)) + (i128{2} << (c + shift)) -
                   (i128{2} << (d + shift));
  return make_fraction(num, i128{6} << shift);
}

std::optional<Fraction> circulant_factored_form(int n, int k) {
  if (n % 2 == 0) return std::nullopt;
  const Fraction p = pow2(2 * k - 1);
  const Fraction a_k = make_fraction(p.num + p.den, p.den * 3);
  const Fraction m{(i128{1} << n) - 1, 1};
  return a_k * m * m * pow2((n + 1) / 2 - k);
}

CirculantReport circulant_formula_report(int n, int max_n) {
  if (n < 1) throw InvalidArgument("circulant_formula_report: order must be positive");
  if (n > max_n) throw LimitExceeded("circulant_formula_report", n, max_n);
  CirculantReport r;
  r.n = n;
  for (int k = 0; k < n; ++k) {
    CirculantRow row;
    row.k = k;
    row.perm = circulant(n, k);
    const Xray x = xray(row.perm);
    row.word.assign(x.word().begin(), x.word().end());
    if (x.is_binary()) row.d_direct = decimal_expansion(x);
    row.d_formula = circulant_closed_form(n, k);
    row.d_factored = circulant_factored_form(n, k);
    row.matches = row.d_direct && row.d_formula && row.d_formula->is_integer() &&
                  row.d_formula->num == static_cast<i128>(*row.d_direct);
    if (!row.matches) ++r.mismatches;
    r.rows.push_back(std::move(row));
  }
  std::multiset<i128> direct, formula;
  bool comparable = true;
  for (const auto& row : r.rows) {
    std::vector<int> hits;
    for (const auto& other : r.rows)
      if (row.d_formula && other.d_direct && row.d_formula->is_integer() &&
          row.d_formula->num == static_cast<i128>(*other.d_direct))
        hits.push_back(other.k);
    r.index_map.push_back(std::move(hits));
    if (!row.d_direct || !row.d_formula || !row.d_formula->is_integer()) {
      comparable = false;
    } else {
      direct.insert(static_cast<i128>(*row.d_direct));
      formula.insert(row.d_formula->num);
    }
  }
  r.agrees_up_to_reindexing = comparable && direct == formula;
  return r;
}

std::vector<Word> zero_two_xrays(int n, const SweepOptions& opts) {
  check_limit("zero_two_xrays", n, opts);
  if (n % 2 == 1) return {};
  const int lines = 2 * n - 1;
  std::set<Word> found;
  std::vector<int> load(static_cast<std::size_t>(lines), 0);
  u64 cols = 0;
  int half_open = 0;  // lines holding exactly one cell
  auto rec = [&](auto& self, int row) -> void {
    if (row > n) {
      if (half_open == 0) found.insert(load);
      return;
    }
    const int left = n - row + 1;
    if (half_open > left || (left - half_open) % 2 != 0) return;
    // each half-open line needs a future row that can still reach it
    const u64 free_cols = ~cols;
    for (int k = 1; k <= lines; ++k) {
      if (load[static_cast<std::size_t>(k - 1)] != 1) continue;
      bool reachable = false;
      for (int r = row; r <= n && !reachable; ++r) {
        const int c = k - r + 1;
        if (c >= 1 && c <= n && (free_cols >> (c - 1) & 1)) reachable = true;
      }
      if (!reachable) return;
    }
    for (int c = 1; c <= n; ++c) {
      const u64 cb = u64{1} << (c - 1);
      int& l = load[static_cast<std::size_t>(row + c - 2)];
      if ((cols & cb) || l >= 2) continue;
      cols |= cb;
      half_open += l == 0 ? 1 : -1;
      ++l;
      self(self, row + 1);
      --l;
      half_open -= l == 0 ? 1 : -1;
      cols &= ~cb;
    }
  };
  rec(rec, 1);
  return {found.begin(), found.end()};
}

std::uint64_t count_zero_two_xrays(int n, const SweepOptions& opts) { return zero_two_xrays(n, opts).size(); }

std::vector<ScorePoint> enumerate_score_points(int n, const SweepOptions& opts) {
  check_limit("enumerate_score_points", n, opts);
  std::vector<ScorePoint> out;
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  // step i sets p_i from p_{i-1} with increment d_i >= d_{i-1} - 1
  auto rec = [&](auto& self, int i, int prev_d) -> void {
    const int cur = p[static_cast<std::size_t>(i - 1)];
    if (i == n) {
      // p_n = 0 forces d_n = -p_{n-1}
      if (n == 1 || -cur >= prev_d - 1) out.push_back({n, p});
      return;
    }
    const int lo = std::max(i == 1 ? -cur : prev_d - 1, -cur);
    // from p_i with increment d, p_n is at least p_i + m*d - m(m+1)/2 with m = n - i
    const int m = n - i;
    for (int d = lo;; ++d) {
      const int next = cur + d;
      if (static_cast<long long>(next) + static_cast<long long>(m) * d - static_cast<long long>(m) * (m + 1) / 2 > 0)
        break;
      p[static_cast<std::size_t>(i)] = next;
      self(self, i + 1, d);
    }
    p[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 1, 0);
  return out;
}

std::uint64_t score_sequences(int n, const SweepOptions& opts) { return enumerate_score_points(n, opts).size(); }

}  // namespace permxray

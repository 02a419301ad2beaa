#include "permxray/degeneracy.hpp"

#include <algorithm>
#include <unordered_map>

#include "permxray/error.hpp"

namespace permxray {

namespace {

void check_limit(const char* what, int n, const SweepOptions& opts) {
  if (n < 1) throw InvalidArgument(std::string(what) + ": order must be positive");
  if (n > opts.max_n) throw LimitExceeded(what, n, opts.max_n);
  if (n > 32) throw LimitExceeded(what, n, 32);
}

// One byte per entry; entries never exceed n, which is far below 256 here.
std::string compact_key(std::span<const int> word) {
  std::string key(word.size(), '\0');
  for (std::size_t i = 0; i < word.size(); ++i) key[i] = static_cast<char>(word[i]);
  return key;
}

Word from_compact(const std::string& key) {
  Word w(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) w[i] = static_cast<unsigned char>(key[i]);
  return w;
}

struct Bucket {
  std::uint64_t size = 0;
  std::vector<std::vector<int>> members;
};

using BucketMap = std::unordered_map<std::string, Bucket>;

}  // namespace

std::uint64_t DegeneracyReport::total() const {
  std::uint64_t t = 0;
  for (auto [a, b] : histogram) t += a * b;
  return t;
}

const DegeneracyClass* DegeneracyReport::find(const Word& word) const {
  auto it = classes.find(format_word(word));
  return it == classes.end() ? nullptr : &it->second;
}

DegeneracyReport enumerate_classes(int n, const SweepOptions& opts, bool keep_members) {
  check_limit("enumerate_classes", n, opts);
  const std::size_t len = static_cast<std::size_t>(2 * n - 1);
  auto parts = sweep_by_first_value(n, opts.threads, BucketMap{}, [&](std::span<const int> values, BucketMap& acc) {
    int buf[64];
    std::span<int> w(buf, len);
    fill_xray(values, w);
    Bucket& b = acc[compact_key(w)];
    ++b.size;
    if (keep_members) b.members.emplace_back(values.begin(), values.end());
  });

  // Chunks are ordered by first value, so appending keeps members lexicographic.
  std::map<std::string, DegeneracyClass> merged;
  std::unordered_map<std::string, std::string> display;
  for (auto& part : parts) {
    for (auto& [key, bucket] : part) {
      auto d = display.find(key);
      if (d == display.end()) d = display.emplace(key, format_word(from_compact(key))).first;
      DegeneracyClass& cls = merged[d->second];
      if (cls.word.empty()) cls.word = from_compact(key);
      cls.size += bucket.size;
      for (auto& m : bucket.members) cls.members.emplace_back(std::move(m));
    }
  }

  DegeneracyReport report;
  report.n = n;
  report.has_members = keep_members;
  report.classes = std::move(merged);
  for (const auto& [key, cls] : report.classes) ++report.histogram[cls.size];
  return report;
}

std::uint64_t count_distinct_xrays(int n, const SweepOptions& opts) {
  return enumerate_classes(n, opts, false).distinct();
}

DifferenceMultiset difference_multiset(const Permutation& p) {
  DifferenceMultiset m;
  m.n = p.size();
  m.entries.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) m.entries.push_back(i - p(i));
  std::sort(m.entries.begin(), m.entries.end());
  return m;
}

MultisetBijectionCheck check_multiset_bijection(int n, const SweepOptions& opts) {
  check_limit("check_multiset_bijection", n, opts);
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  auto parts = sweep_by_first_value(n, opts.threads, Pairs{}, [&](std::span<const int> values, Pairs& acc) {
    int buf[64];
    std::span<int> w(buf, static_cast<std::size_t>(2 * n - 1));
    fill_xray(values, w);
    // M(s) for s = column_reverse(p): i - (n+1-p(i))
    std::string ms(values.size(), '\0');
    std::vector<int> diff(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) diff[i] = static_cast<int>(i) + 1 - (n + 1 - values[i]);
    std::sort(diff.begin(), diff.end());
    for (std::size_t i = 0; i < diff.size(); ++i) ms[i] = static_cast<char>(diff[i] + n);
    acc.emplace_back(compact_key(w), std::move(ms));
  });

  // Equal partitions <=> the relation X-ray ~ multiset is a bijection.
  std::unordered_map<std::string, std::string> by_xray;
  std::unordered_map<std::string, std::string> by_multiset;
  bool ok = true;
  for (auto& part : parts) {
    for (auto& [x, m] : part) {
      auto [ix, fresh_x] = by_xray.emplace(x, m);
      if (!fresh_x && ix->second != m) ok = false;
      auto [im, fresh_m] = by_multiset.emplace(m, x);
      if (!fresh_m && im->second != x) ok = false;
    }
  }
  return {n, by_xray.size(), by_multiset.size(), ok};
}

Xray build_xmax(int n) {
  if (n <= 2) throw Undefined("x_max is not unique for n <= 2");
  Word w;
  if (n % 2 == 1) {
    w.assign(static_cast<std::size_t>((n - 1) / 2), 0);
    w.insert(w.end(), static_cast<std::size_t>(n), 1);
    w.insert(w.end(), static_cast<std::size_t>((n - 1) / 2), 0);
  } else {
    const auto half = static_cast<std::size_t>(n / 2);
    w.assign(half, 0);
    w.insert(w.end(), half - 1, 1);
    w.push_back(2);
    w.insert(w.end(), half - 1, 1);
    w.insert(w.end(), half, 0);
  }
  return Xray(n, std::move(w));
}

MaxDegeneracy max_degeneracy(const DegeneracyReport& report) {
  MaxDegeneracy out;
  for (const auto& [key, cls] : report.classes) {
    if (cls.size > out.delta) {
      out.delta = cls.size;
      out.words.clear();
    }
    if (cls.size == out.delta) out.words.push_back(cls.word);
  }
  return out;
}

std::uint64_t delta_of(const Word& word, const SweepOptions& opts) {
  if (word.size() % 2 == 0) throw InvalidXray("word length " + std::to_string(word.size()) + " is even");
  const int n = static_cast<int>(word.size() + 1) / 2;
  check_limit("delta_of", n, opts);
  auto parts = sweep_by_first_value(n, opts.threads, std::uint64_t{0}, [&](std::span<const int> values, std::uint64_t& acc) {
    int buf[64];
    std::span<int> w(buf, word.size());
    fill_xray(values, w);
    if (std::equal(w.begin(), w.end(), word.begin())) ++acc;
  });
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return total;
}

std::uint64_t delta_of(const Xray& x, const SweepOptions& opts) {
  return delta_of(Word(x.word().begin(), x.word().end()), opts);
}

std::vector<std::uint64_t> entrywise_sum(int n, const SweepOptions& opts) {
  check_limit("entrywise_sum", n, opts);
  const std::size_t len = static_cast<std::size_t>(2 * n - 1);
  using Sums = std::vector<std::uint64_t>;
  return sweep_fold(
      n, opts.threads, Sums(len, 0),
      [&](std::span<const int> values, Sums& acc) {
        for (std::size_t i = 0; i < values.size(); ++i) ++acc[i + static_cast<std::size_t>(values[i]) - 1];
      },
      [](Sums& out, Sums&& part) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += part[k];
      });
}

std::vector<std::uint64_t> entrywise_sum_closed_form(int n) {
  if (n < 1) throw InvalidArgument("order must be positive");
  const std::uint64_t f = factorial(n - 1);
  std::vector<std::uint64_t> out;
  for (int k = 1; k <= 2 * n - 1; ++k) out.push_back(static_cast<std::uint64_t>(line_capacity(n, k)) * f);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace permxray

#include "permxray/reconstruct.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "permxray/degeneracy.hpp"
#include "permxray/error.hpp"

namespace permxray {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Columns lo..hi (1-based, inclusive) as a mask; empty when lo > hi.
inline u64 column_range(int lo, int hi) {
  if (lo > hi) return 0;
  const u64 upper = hi >= 64 ? ~u64{0} : (u64{1} << hi) - 1;
  const u64 lower = (u64{1} << (lo - 1)) - 1;
  return upper & ~lower;
}

inline int lowest_bit(u128 m) {
  const u64 low = static_cast<u64>(m);
  return low != 0 ? std::countr_zero(low) : 64 + std::countr_zero(static_cast<u64>(m >> 64));
}

class Search {
 public:
  Search(int n, const Word& target, SolveMode mode, const SolveOptions& opts)
      : n_(n), mode_(mode), opts_(opts), budget_(target), values_(static_cast<std::size_t>(n), 0) {
    for (int k = 1; k <= 2 * n - 1; ++k)
      if (budget_[static_cast<std::size_t>(k - 1)] > 0) open_ |= u128{1} << (k - 1);
  }

  // Subtree with row 1 fixed to column `col`.
  void run_from_first(int col) {
    if (feasible(0) && try_place(1, col)) {
      descend(2);
      undo(1, col);
    }
  }

  void run() { descend(1); }

  u64 nodes() const { return nodes_; }
  u64 count() const { return count_; }
  std::vector<Permutation>& witnesses() { return witnesses_; }
  bool stopped() const { return stop_; }

 private:
  bool try_place(int row, int col) {
    const u64 bit = u64{1} << (col - 1);
    if (used_ & bit) return false;
    const int k = row + col - 1;
    int& b = budget_[static_cast<std::size_t>(k - 1)];
    if (b <= 0) return false;
    ++nodes_;
    if (mode_ == SolveMode::decide && nodes_ > opts_.node_budget) throw NodeBudgetExhausted(nodes_, opts_.node_budget);
    used_ |= bit;
    if (--b == 0) open_ &= ~(u128{1} << (k - 1));
    values_[static_cast<std::size_t>(row - 1)] = col;
    return true;
  }

  void undo(int row, int col) {
    const int k = row + col - 1;
    int& b = budget_[static_cast<std::size_t>(k - 1)];
    if (b++ == 0) open_ |= u128{1} << (k - 1);
    used_ &= ~(u64{1} << (col - 1));
  }

  // Rows 1..placed are fixed.
  bool feasible(int placed) const {
    const u64 free_cols = ~used_ & column_range(1, n_);
    if (opts_.prune.line_reach) {
      for (u128 m = open_; m != 0; m &= m - 1) {
        const int k = lowest_bit(m) + 1;
        const int lo = std::max(1, k - n_ + 1);
        const int hi = std::min(n_, k - placed);
        const int reach = std::popcount(free_cols & column_range(lo, hi));
        if (budget_[static_cast<std::size_t>(k - 1)] > reach) return false;
      }
    }
    if (opts_.prune.row_lookahead) {
      for (int r = placed + 1; r <= n_; ++r)
        if ((static_cast<u64>(open_ >> (r - 1)) & free_cols) == 0) return false;
    }
    return true;
  }

  void descend(int row) {
    if (row > n_) {
      ++count_;
      if (mode_ != SolveMode::count) witnesses_.emplace_back(values_);
      if (mode_ == SolveMode::decide) stop_ = true;
      return;
    }
    if (!feasible(row - 1)) return;
    for (int col = 1; col <= n_ && !stop_; ++col) {
      if (!try_place(row, col)) continue;
      descend(row + 1);
      undo(row, col);
    }
  }

  int n_;
  SolveMode mode_;
  const SolveOptions& opts_;
  Word budget_;
  std::vector<int> values_;
  u64 used_ = 0;
  u128 open_ = 0;
  u64 nodes_ = 0;
  u64 count_ = 0;
  bool stop_ = false;
  std::vector<Permutation> witnesses_;
};

}  // namespace

const char* to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::decide:
      return "decide";
    case SolveMode::count:
      return "count";
    case SolveMode::enumerate:
      return "enumerate";
  }
  return "?";
}

SolveMode parse_solve_mode(const std::string& text) {
  if (text == "decide") return SolveMode::decide;
  if (text == "count") return SolveMode::count;
  if (text == "enumerate") return SolveMode::enumerate;
  throw InvalidArgument("unknown solve mode '" + text + "'");
}

ReconstructionInstance ReconstructionInstance::from_word(Word word) {
  ReconstructionInstance inst;
  if (!word.empty() && word.size() % 2 == 1) inst.n = static_cast<int>(word.size() + 1) / 2;
  inst.target = std::move(word);
  return inst;
}

std::string ReconstructionInstance::infeasibility() const {
  if (n < 1 || target.size() != static_cast<std::size_t>(2 * n - 1))
    return "word length " + std::to_string(target.size()) + " is not of the form 2n-1";
  int total = 0;
  for (int k = 1; k <= 2 * n - 1; ++k) {
    const int e = target[static_cast<std::size_t>(k - 1)];
    if (e < 0 || e > line_capacity(n, k))
      return "entry " + std::to_string(k) + " = " + std::to_string(e) + " exceeds line capacity " +
             std::to_string(line_capacity(n, k));
    total += e;
  }
  if (total != n) return "entries sum to " + std::to_string(total) + ", not " + std::to_string(n);
  return {};
}

SolveOutcome solve(const ReconstructionInstance& inst, SolveMode mode, const SolveOptions& opts) {
  SolveOutcome out;
  out.mode = mode;
  if (inst.n > kMaxSolverOrder) throw LimitExceeded("solve", inst.n, kMaxSolverOrder);
  if (mode != SolveMode::decide && inst.n > opts.max_n) throw LimitExceeded("solve", inst.n, opts.max_n);
  out.infeasible_reason = inst.infeasibility();
  if (!out.infeasible_reason.empty()) return out;

  if (mode == SolveMode::decide) {
    Search s(inst.n, inst.target, mode, opts);
    s.run();
    out.nodes_explored = s.nodes();
    out.witnesses = std::move(s.witnesses());
    out.count = out.witnesses.size();
    out.found = !out.witnesses.empty();
    return out;
  }

  // Independent subtrees per first-row column, merged in column order.
  struct Part {
    u64 nodes = 0;
    u64 count = 0;
    std::vector<Permutation> witnesses;
  };
  std::vector<Part> parts(static_cast<std::size_t>(inst.n));
  run_chunks(inst.n, opts.threads, [&](int chunk) {
    Search s(inst.n, inst.target, mode, opts);
    s.run_from_first(chunk + 1);
    Part& p = parts[static_cast<std::size_t>(chunk)];
    p.nodes = s.nodes();
    p.count = s.count();
    p.witnesses = std::move(s.witnesses());
  });
  for (auto& p : parts) {
    out.nodes_explored += p.nodes;
    out.count += p.count;
    for (auto& w : p.witnesses) out.witnesses.push_back(std::move(w));
  }
  out.found = out.count > 0;
  return out;
}

CrossValidation cross_validate(int n, int limit, const SolveOptions& opts, int corrupted, std::uint64_t seed) {
  if (n > limit) throw LimitExceeded("cross_validate", n, limit);
  CrossValidation cv;
  cv.n = n;
  SweepOptions sweep;
  sweep.max_n = limit;
  sweep.threads = opts.threads;
  const DegeneracyReport report = enumerate_classes(n, sweep, false);

  SolveOptions single = opts;
  single.threads = 1;
  std::vector<const DegeneracyClass*> classes;
  for (const auto& [key, cls] : report.classes) {
    classes.push_back(&cls);
    const SolveOutcome r = solve(ReconstructionInstance::from_word(cls.word), SolveMode::count, single);
    ++cv.words_checked;
    cv.solver_total += r.count;
    if (r.count != cls.size)
      cv.mismatches.push_back(key + ": solver " + std::to_string(r.count) + " vs brute force " + std::to_string(cls.size));
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < corrupted; ++t) {
    Word w = classes[rng() % classes.size()]->word;
    const std::size_t to = rng() % w.size();
    if (t % 2 == 0) {
      // shift one unit: sum preserved, capacity may break
      std::vector<std::size_t> donors;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > 0 && i != to) donors.push_back(i);
      if (donors.empty()) {
        ++w[to];
      } else {
        --w[donors[rng() % donors.size()]];
        ++w[to];
      }
    } else {
      ++w[to];
    }
    const DegeneracyClass* cls = report.find(w);
    const std::uint64_t expected = cls ? cls->size : 0;
    const SolveOutcome r = solve(ReconstructionInstance::from_word(w), SolveMode::count, single);
    ++cv.corrupted_checked;
    if (r.count != expected)
      cv.mismatches.push_back(format_word(w) + " (corrupted): solver " + std::to_string(r.count) + " vs brute force " +
                              std::to_string(expected));
  }
  return cv;
}

}  // namespace permxray

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permxray/permutation.hpp"
#include "permxray/sweep.hpp"

namespace permxray {

enum class SolveMode { decide, count, enumerate };

const char* to_string(SolveMode mode);
SolveMode parse_solve_mode(const std::string& text);

// Individual cuts of the search; switching one off must never change counts.
struct PruneRules {
  // every open antidiagonal keeps at least budget-many reachable future rows
  bool line_reach = true;
  // every future row keeps at least one usable cell
  bool row_lookahead = true;
};

struct SolveOptions {
  // order cap for count/enumerate
  int max_n = 12;
  // node cap for decide
  std::uint64_t node_budget = 100'000'000;
  unsigned threads = 1;
  PruneRules prune;
};

// Hard cap from the 64-bit column mask.
inline constexpr int kMaxSolverOrder = 64;

// A word to reconstruct. Its order comes from the length; an even or empty
// length leaves n = 0 and the instance trivially infeasible.
struct ReconstructionInstance {
  int n = 0;
  Word target;

  static ReconstructionInstance from_word(Word word);
  // Empty when the word passes the length, sum and capacity checks.
  std::string infeasibility() const;
};

struct SolveOutcome {
  SolveMode mode = SolveMode::decide;
  bool found = false;
  std::uint64_t count = 0;
  // enumerate: all solutions, lexicographic. decide: the first solution, if any.
  std::vector<Permutation> witnesses;
  std::uint64_t nodes_explored = 0;
  // set when the instance was rejected before search
  std::string infeasible_reason;
};

// Row-by-row backtracking with a column mask and per-antidiagonal budgets.
// decide throws NodeBudgetExhausted past opts.node_budget; count/enumerate
// throw LimitExceeded above opts.max_n.
SolveOutcome solve(const ReconstructionInstance& inst, SolveMode mode, const SolveOptions& opts = {});

struct CrossValidation {
  int n = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t corrupted_checked = 0;
  std::uint64_t solver_total = 0;  // sum of solver counts over realizable words
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Solver counts against the brute-force class sizes for every X-ray of S_n,
// plus `corrupted` perturbed words compared against the same brute-force map.
CrossValidation cross_validate(int n, int limit = 7, const SolveOptions& opts = {}, int corrupted = 100,
                               std::uint64_t seed = 20241017);

}  // namespace permxray

#pragma once

#include <algorithm>
#include <atomic>
#include <numeric>
#include <span>
#include <thread>
#include <vector>

namespace permxray {

// Shared knobs for exhaustive sweeps over S_n.
struct SweepOptions {
  int max_n = 10;
  // Worker threads; 0 means hardware concurrency.
  unsigned threads = 1;
};

inline unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// Runs job(0..chunks-1) over a pool of worker threads. Each chunk index is
// handed out exactly once; job must only touch state owned by its chunk.
template <class Job>
void run_chunks(int chunks, unsigned threads, Job job) {
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max(chunks, 1)));
  if (threads <= 1) {
    for (int c = 0; c < chunks; ++c) job(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) job(c);
    });
}

// Visits every permutation of [n] (one-line, 1-based values) in lexicographic
// order, split into n chunks by first value. visit(values, acc) sees the
// permutations of chunk v with accumulator v-1. Chunks come back ordered by
// first value, so folding them left to right reproduces the sequential order.
template <class Acc, class Visit>
std::vector<Acc> sweep_by_first_value(int n, unsigned threads, const Acc& init, Visit visit) {
  std::vector<Acc> parts(static_cast<std::size_t>(n), init);
  run_chunks(n, threads, [&](int chunk) {
    std::vector<int> values(static_cast<std::size_t>(n));
    values[0] = chunk + 1;
    int next = 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (next == chunk + 1) ++next;
      values[i] = next++;
    }
    Acc& acc = parts[static_cast<std::size_t>(chunk)];
    do {
      visit(std::span<const int>(values), acc);
    } while (std::next_permutation(values.begin() + 1, values.end()));
  });
  return parts;
}

// Sweep then fold the chunk accumulators in first-value order.
template <class Acc, class Visit, class Merge>
Acc sweep_fold(int n, unsigned threads, const Acc& init, Visit visit, Merge merge) {
  auto parts = sweep_by_first_value(n, threads, init, visit);
  Acc out = init;
  for (auto& p : parts) merge(out, std::move(p));
  return out;
}

}  // namespace permxray

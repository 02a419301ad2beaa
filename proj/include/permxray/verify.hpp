#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "permxray/oeis.hpp"
#include "permxray/structures.hpp"
#include "permxray/sweep.hpp"

namespace permxray {

enum class Status { pass, fail, inconclusive };
const char* to_string(Status s);

struct VerifyResult {
  std::string proposition;
  Status status = Status::inconclusive;
  int max_n = 0;
  // human readable, one fact per line
  std::vector<std::string> evidence;
  nlohmann::json details = nlohmann::json::object();

  // 0 pass, 1 verified false, 2 inconclusive
  int exit_code() const;
};

struct VerifyOptions {
  // 0 picks the proposition's default order
  int max_n = 0;
  // hard cap for any requested order
  int limit_n = 10;
  SweepOptions sweep{10, 1};
  // external sequence oracle; comparisons are skipped when null
  oeis::Client* client = nullptr;
  // random inflations for proposition 3
  int samples = 200;
  std::uint64_t seed = 20241017;
};

// "1".."6", "conj-binary", "conj-adjacent", "conj-zerotwo"
const std::vector<std::string>& propositions();
int default_max_n(const std::string& proposition);

// Throws InvalidArgument for an unknown proposition and LimitExceeded when
// max_n exceeds limit_n. A nonempty counterexample is a fail, not an error.
VerifyResult verify(const std::string& proposition, const VerifyOptions& opts = {});

// An inflation whose skeleton is not the identity and has a non-involution
// part, or whose skeleton is the identity and has two non-involution parts.
Inflation random_qualifying_inflation(std::mt19937_64& rng);

}  // namespace permxray

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permxray {

// Base of every error the library throws. Callers that only want to report
// and exit can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidXray : public Error {
 public:
  using Error::Error;
};

// An operation that needs entries in {0,1} was given a word with an entry >= 2.
class NonBinaryXray : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, int n, int limit)
      : Error(what + ": n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

class Undefined : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NodeBudgetExhausted : public Error {
 public:
  NodeBudgetExhausted(std::uint64_t nodes, std::uint64_t budget)
      : Error("node budget exhausted after " + std::to_string(nodes) + " nodes (budget " +
              std::to_string(budget) + ")"),
        nodes_(nodes),
        budget_(budget) {}
  std::uint64_t nodes_explored() const { return nodes_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t nodes_;
  std::uint64_t budget_;
};

class IsInvolution : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace permxray

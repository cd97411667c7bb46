#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace neumaier {

// Base for every exception thrown by the library. `code()` is a stable
// machine-readable tag ("ParseError", "BudgetExceeded", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed or precondition-violating input.
class InvalidInput : public Error {
 public:
  using Error::Error;
  explicit InvalidInput(const std::string& message) : Error("InvalidInput", message) {}
};

class ParseError : public InvalidInput {
 public:
  explicit ParseError(const std::string& message) : InvalidInput("ParseError", message) {}
};

// A configured node/time budget ran out. Never accompanied by a silent
// partial answer.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message) : Error("BudgetExceeded", message) {}
};

class SearchSpaceTooLarge : public Error {
 public:
  explicit SearchSpaceTooLarge(const std::string& message)
      : Error("SearchSpaceTooLarge", message) {}
};

// Why a verification did not succeed. `witness` holds the offending
// element/vertex indices (and, where meaningful, an observed count last).
struct Failure {
  std::string code;
  std::string detail;
  std::vector<std::int64_t> witness;
};

// Outcome of a verification: either the computed value or a Failure.
// A failed verification is an ordinary result, not an exception.
template <typename T>
class Verdict {
 public:
  Verdict(T value) : state_(std::move(value)) {}
  Verdict(Failure failure) : state_(std::move(failure)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const {
    if (!ok()) {
      const auto& f = std::get<Failure>(state_);
      throw Error(f.code, "verdict holds a failure: " + f.detail);
    }
    return std::get<T>(state_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const Failure& failure() const {
    if (ok()) throw std::logic_error("verdict holds a value, not a failure");
    return std::get<Failure>(state_);
  }

  std::optional<T> as_optional() const {
    if (ok()) return std::get<T>(state_);
    return std::nullopt;
  }

 private:
  std::variant<T, Failure> state_;
};

inline Failure make_failure(std::string code, std::string detail,
                            std::vector<std::int64_t> witness = {}) {
  return Failure{std::move(code), std::move(detail), std::move(witness)};
}

// Reads NEUMAIER_BUDGET, falling back to `fallback` when unset or unparsable.
std::uint64_t default_node_budget(std::uint64_t fallback = 200'000'000ULL);

}  // namespace neumaier

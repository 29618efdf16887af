#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "forestdyn/bigint.hpp"

namespace forestdyn {

// Malformed arguments: out-of-range endpoints, loops, non-forests, bad
// separation pairs and the like.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size guard or work budget refused the request. `count` carries the
// predicted size when one is known (forest counts, subset counts).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what,
                         std::optional<BigInt> count = std::nullopt,
                         bool count_is_exact = true,
                         std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(what),
        count_(std::move(count)),
        exact_(count_is_exact),
        step_(step) {}

  const std::optional<BigInt>& count() const noexcept { return count_; }
  // False when `count` is only a certified lower bound.
  bool count_is_exact() const noexcept { return exact_; }
  // Iteration step reached before the refusal (iterate_F only).
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  std::optional<BigInt> count_;
  bool exact_;
  std::optional<std::size_t> step_;
};

// Text input that does not parse. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace forestdyn

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lipcert {

/// Operand shapes do not agree (vector lengths, matrix chain, table side).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the operation's domain (negative radicand, non-positive
/// divisor, negative epsilon, asymmetric Gram matrix, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `position` is a zero-based character offset
/// into the text that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position)
      : std::runtime_error(message), token_(std::move(token)), position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

}  // namespace lipcert

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordmap {

enum class ErrorCode {
  Syntax,
  Overflow,
  NotAUnit,
  InexactDivision,
  ZeroParameter,
  NotUnimodular,
  TrivialWord,
  Precondition,
  PrecisionExhausted,
  Cancelled,
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the word parser; `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Syntax,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wordmap

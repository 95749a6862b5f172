#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mereo {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated precondition or contract (wrong system, bad index, ...).
struct DomainError : Error {
  using Error::Error;
};

// Positioned diagnostic from the text formats. Lines and columns are 1-based.
struct ParseError : Error {
  std::size_t line;
  std::size_t column;

  ParseError(std::string message, std::size_t line_, std::size_t column_)
      : Error("line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + std::move(message)),
        line(line_),
        column(column_) {}
};

}  // namespace mereo

#pragma once

#include <string>
#include <variant>

#include "mereo/error.hpp"

namespace mereo {

// A label scalar: a binary64 number or a symbolic tag. Comparisons are exact
// on the stored representation.
class Value {
 public:
  Value() : data_(0.0) {}
  Value(double v) : data_(v) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(const char* s) : data_(std::string(s)) {}

  bool is_number() const { return std::holds_alternative<double>(data_); }
  bool is_symbol() const { return !is_number(); }

  double num() const {
    if (!is_number()) throw DomainError("value is not a number: " + sym());
    return std::get<double>(data_);
  }
  const std::string& sym() const {
    if (!is_symbol()) throw DomainError("value is not a symbol");
    return std::get<std::string>(data_);
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.data_ == b.data_;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b) {
    return a.data_ < b.data_;
  }

  std::string to_string() const;

 private:
  std::variant<double, std::string> data_;
};

// Shortest decimal form that round-trips through binary64.
std::string format_number(double v);

}  // namespace mereo

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mereo/error.hpp"

namespace mereo {

// Fixed-size bitset over 64-bit words. Bit i is the truth value at index i.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size, bool fill = false)
      : size_(size), words_((size + 63) / 64, fill ? ~0ull : 0ull) {
    trim();
  }

  // From a string of '0'/'1', index 0 first.
  static Bitset from_string(const std::string& s) {
    Bitset b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b.set(i);
      else if (s[i] != '0')
        throw DomainError("bitset string must contain only 0 and 1");
    }
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    check(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    check(i);
    if (v)
      words_[i >> 6] |= 1ull << (i & 63);
    else
      words_[i >> 6] &= ~(1ull << (i & 63));
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool all() const { return count() == size_; }

  bool is_subset_of(const Bitset& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
  Bitset operator|(const Bitset& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
  Bitset operator^(const Bitset& o) const { return zip(o, [](auto a, auto b) { return a ^ b; }); }
  Bitset operator~() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

 private:
  template <class F>
  Bitset zip(const Bitset& o, F f) const {
    check_same(o);
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = f(words_[i], o.words_[i]);
    return r;
  }
  void check(std::size_t i) const {
    if (i >= size_) throw DomainError("bitset index out of range");
  }
  void check_same(const Bitset& o) const {
    if (size_ != o.size_) throw DomainError("bitset size mismatch");
  }
  void trim() {
    if (size_ & 63) words_.back() &= (1ull << (size_ & 63)) - 1;
    if (size_ == 0) words_.clear();
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mereo

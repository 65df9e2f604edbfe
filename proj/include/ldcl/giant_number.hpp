#pragma once

// Exact non-negative integers stored as decimal digit strings, plus the two
// operations the codec needs against a repunit-of-nines divisor.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ldcl/error.hpp"

namespace ldcl {

class GiantNumber {
 public:
  GiantNumber() : digits_("0") {}

  explicit GiantNumber(std::uint64_t value) : digits_(std::to_string(value)) {}

  /// Accepts any non-empty run of decimal digits; leading zeros are dropped.
  static GiantNumber from_digits(std::string_view text) {
    if (text.empty()) throw Error(ErrorKind::kValidation, "empty digit string");
    for (char c : text) {
      if (c < '0' || c > '9') throw Error(ErrorKind::kAlphabet, "non-decimal character in number");
    }
    GiantNumber out;
    out.digits_.assign(text);
    out.normalize();
    return out;
  }

  const std::string& digits() const noexcept { return digits_; }
  std::size_t digit_count() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_ == "0"; }

  /// Converts to an integer, failing when the value does not fit.
  std::uint64_t to_u64() const {
    if (digits_.size() > 20) throw Error(ErrorKind::kDomain, "value exceeds 64 bits");
    unsigned __int128 v = 0;
    for (char c : digits_) v = v * 10 + static_cast<unsigned>(c - '0');
    if (v > UINT64_MAX) throw Error(ErrorKind::kDomain, "value exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
  }

  friend std::strong_ordering operator<=>(const GiantNumber& a, const GiantNumber& b) noexcept {
    if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
    return a.digits_.compare(b.digits_) <=> 0;
  }
  friend bool operator==(const GiantNumber&, const GiantNumber&) = default;

  friend GiantNumber operator+(const GiantNumber& a, const GiantNumber& b) {
    const std::string& x = a.digits_;
    const std::string& y = b.digits_;
    GiantNumber out;
    out.digits_.assign(std::max(x.size(), y.size()) + 1, '0');
    int carry = 0;
    auto xi = x.rbegin();
    auto yi = y.rbegin();
    for (auto oi = out.digits_.rbegin(); oi != out.digits_.rend(); ++oi) {
      int sum = carry;
      if (xi != x.rend()) sum += *xi++ - '0';
      if (yi != y.rend()) sum += *yi++ - '0';
      *oi = static_cast<char>('0' + sum % 10);
      carry = sum / 10;
    }
    out.normalize();
    return out;
  }

  /// Requires a >= b.
  friend GiantNumber operator-(const GiantNumber& a, const GiantNumber& b) {
    if (a < b) throw Error(ErrorKind::kDomain, "negative difference");
    GiantNumber out = a;
    int borrow = 0;
    auto yi = b.digits_.rbegin();
    for (auto oi = out.digits_.rbegin(); oi != out.digits_.rend(); ++oi) {
      int d = (*oi - '0') - borrow;
      if (yi != b.digits_.rend()) d -= *yi++ - '0';
      borrow = d < 0 ? 1 : 0;
      *oi = static_cast<char>('0' + d + 10 * borrow);
      if (yi == b.digits_.rend() && borrow == 0) break;
    }
    out.normalize();
    return out;
  }

  friend GiantNumber operator*(const GiantNumber& a, std::uint64_t k) {
    if (k == 0 || a.is_zero()) return GiantNumber();
    std::string rev;
    rev.reserve(a.digits_.size() + 20);
    unsigned __int128 carry = 0;
    for (auto it = a.digits_.rbegin(); it != a.digits_.rend(); ++it) {
      unsigned __int128 v = static_cast<unsigned __int128>(*it - '0') * k + carry;
      rev.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      carry = v / 10;
    }
    while (carry != 0) {
      rev.push_back(static_cast<char>('0' + static_cast<int>(carry % 10)));
      carry /= 10;
    }
    GiantNumber out;
    out.digits_.assign(rev.rbegin(), rev.rend());
    return out;
  }

 private:
  void normalize() {
    const auto first = digits_.find_first_not_of('0');
    if (first == std::string::npos) {
      digits_ = "0";
    } else if (first > 0) {
      digits_.erase(0, first);
    }
  }

  std::string digits_;
};

/// The repunit-of-nines D = 10^nines - 1, both subtrahend and log base.
class DefaultNumber {
 public:
  explicit DefaultNumber(std::size_t nines) : nines_(nines) {
    if (nines == 0) throw Error(ErrorKind::kDomain, "default number needs at least one nine");
  }

  /// The default number used for a set of `set_digits` digits.
  static DefaultNumber for_set_length(std::size_t set_digits) { return DefaultNumber(set_digits - 1); }

  std::size_t nines() const noexcept { return nines_; }
  GiantNumber value() const { return GiantNumber::from_digits(std::string(nines_, '9')); }

  friend bool operator==(const DefaultNumber&, const DefaultNumber&) = default;

 private:
  std::size_t nines_;
};

struct DivModResult {
  std::uint64_t multiplier = 0;  // m
  GiantNumber remainder;         // r, 0 <= r < D

  friend bool operator==(const DivModResult&, const DivModResult&) = default;
};

namespace detail {

// Digit-string helpers for normalized strings ("" denotes zero).
inline int compare_digits(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

inline void subtract_in_place(std::string& a, std::string_view b) {
  int borrow = 0;
  auto bi = b.rbegin();
  for (auto ai = a.rbegin(); ai != a.rend(); ++ai) {
    if (bi == b.rend() && borrow == 0) break;
    int d = (*ai - '0') - borrow;
    if (bi != b.rend()) d -= *bi++ - '0';
    borrow = d < 0 ? 1 : 0;
    *ai = static_cast<char>('0' + d + 10 * borrow);
  }
  const auto first = a.find_first_not_of('0');
  a.erase(0, first == std::string::npos ? a.size() : first);
}

}  // namespace detail

/// Schoolbook long division of s by D: s = m*D + r. Each quotient digit
/// needs at most nine trial subtractions because the running remainder
/// stays below 10*D.
inline DivModResult divmod_default(const GiantNumber& s, const DefaultNumber& d) {
  if (s.is_zero()) throw Error(ErrorKind::kDomain, "cannot reduce a zero set value");
  const std::string divisor(d.nines(), '9');

  std::string quotient;
  quotient.reserve(s.digit_count());
  std::string rem;
  rem.reserve(divisor.size() + 2);
  for (char c : s.digits()) {
    if (!(rem.empty() && c == '0')) rem.push_back(c);
    int q = 0;
    while (detail::compare_digits(rem, divisor) >= 0) {
      detail::subtract_in_place(rem, divisor);
      ++q;
    }
    quotient.push_back(static_cast<char>('0' + q));
  }

  DivModResult out;
  out.multiplier = GiantNumber::from_digits(quotient).to_u64();
  out.remainder = rem.empty() ? GiantNumber() : GiantNumber::from_digits(rem);
  return out;
}

/// r + m*D exactly.
inline GiantNumber add_multiples(const GiantNumber& r, std::uint64_t m, const DefaultNumber& d) {
  return r + d.value() * m;
}

}  // namespace ldcl

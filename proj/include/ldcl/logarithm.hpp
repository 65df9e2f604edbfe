#pragma once

// Base-D logarithms and antilogarithms with a fixed number of stored decimal
// fraction digits. The stored fraction is the only lossy quantity in the
// codec: everything else is exact integer arithmetic.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "ldcl/detail/big_float.hpp"
#include "ldcl/error.hpp"
#include "ldcl/giant_number.hpp"

namespace ldcl {

/// A value in [0, 1) held as exactly `precision()` decimal digits after "0.".
class LogFraction {
 public:
  LogFraction() = default;

  static LogFraction zero(std::size_t precision) { return LogFraction(std::string(precision, '0')); }

  static LogFraction from_digits(std::string_view digits) {
    if (digits.empty()) throw Error(ErrorKind::kValidation, "log fraction needs at least one digit");
    for (char c : digits) {
      if (c < '0' || c > '9') throw Error(ErrorKind::kAlphabet, "non-decimal digit in log fraction");
    }
    return LogFraction(std::string(digits));
  }

  const std::string& digits() const noexcept { return digits_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.find_first_not_of('0') == std::string::npos; }
  std::string to_string() const { return "0." + digits_; }

  friend bool operator==(const LogFraction&, const LogFraction&) = default;

 private:
  explicit LogFraction(std::string digits) : digits_(std::move(digits)) {}

  std::string digits_;
};

/// A logarithm that may exceed 1: integer part plus a stored fraction. Only
/// needed for multipliers, which can reach D when D = 9.
struct SplitLog {
  unsigned integer_part = 0;
  LogFraction fraction;

  friend bool operator==(const SplitLog&, const SplitLog&) = default;
};

/// Precomputed ln(D) at the working precisions required for one (D, p) pair.
/// Immutable after construction, so one instance may serve many threads.
class LogContext {
 public:
  LogContext(DefaultNumber base, std::size_t precision)
      : base_(base),
        largest_residue_(base.value() - GiantNumber(1)),
        precision_(precision),
        log_bits_(detail::bits_for_digits(precision + 10 + decimal_width(base.nines() + 1))),
        exp_bits_(detail::bits_for_digits(base.nines() + 12 + decimal_width(base.nines() + 1))),
        ln_base_log_(log_bits_),
        ln_base_exp_(exp_bits_),
        scale_(log_bits_) {
    if (precision == 0) throw Error(ErrorKind::kDomain, "log precision must be at least one digit");
    init_ln_base(ln_base_log_);
    init_ln_base(ln_base_exp_);
    mpfr_ui_pow_ui(scale_.get(), 10, precision_, MPFR_RNDN);
  }

  const DefaultNumber& base() const noexcept { return base_; }
  std::size_t precision() const noexcept { return precision_; }

  /// round_p(log_D r) for 1 <= r < D, rounded to nearest with ties away from
  /// zero and capped at 0.99..9.
  LogFraction log(const GiantNumber& r) const {
    if (r.is_zero()) throw Error(ErrorKind::kDomain, "logarithm of zero");
    if (r > largest_residue_) throw Error(ErrorKind::kDomain, "log argument must be below the default number");
    SplitLog split = log_split(r);
    if (split.integer_part != 0) return LogFraction::from_digits(std::string(precision_, '9'));
    return std::move(split.fraction);
  }

  /// Integer part and rounded fraction of log_D v for any v >= 1.
  SplitLog log_split(const GiantNumber& v) const {
    if (v.is_zero()) throw Error(ErrorKind::kDomain, "logarithm of zero");
    detail::BigFloat x(log_bits_);
    mpfr_set_str(x.get(), v.digits().c_str(), 10, MPFR_RNDN);
    mpfr_log(x.get(), x.get(), MPFR_RNDN);
    mpfr_div(x.get(), x.get(), ln_base_log_.get(), MPFR_RNDN);

    detail::BigFloat whole(log_bits_);
    mpfr_floor(whole.get(), x.get());
    unsigned integer_part = static_cast<unsigned>(mpfr_get_ui(whole.get(), MPFR_RNDN));
    mpfr_sub(x.get(), x.get(), whole.get(), MPFR_RNDN);
    mpfr_mul(x.get(), x.get(), scale_.get(), MPFR_RNDN);
    mpfr_round(x.get(), x.get());

    detail::BigInt q;
    mpfr_get_z(q.get(), x.get(), MPFR_RNDN);
    std::string digits = q.to_string();
    if (digits.size() > precision_) {
      // The fraction rounded up to exactly 1.
      ++integer_part;
      digits.assign(precision_, '0');
    } else {
      digits.insert(0, precision_ - digits.size(), '0');
    }
    return SplitLog{integer_part, LogFraction::from_digits(digits)};
  }

  /// round(D^(integer_part + fraction)), unclamped.
  GiantNumber power(unsigned integer_part, const LogFraction& fraction) const {
    detail::BigFloat y(exp_bits_);
    const std::string text = std::to_string(integer_part) + "." + fraction.digits();
    mpfr_set_str(y.get(), text.c_str(), 10, MPFR_RNDN);
    mpfr_mul(y.get(), y.get(), ln_base_exp_.get(), MPFR_RNDN);
    mpfr_exp(y.get(), y.get(), MPFR_RNDN);
    mpfr_round(y.get(), y.get());
    detail::BigInt z;
    mpfr_get_z(z.get(), y.get(), MPFR_RNDN);
    return GiantNumber::from_digits(z.to_string());
  }

  /// round(D^L) clamped to [1, D-1].
  GiantNumber antilog(const LogFraction& fraction) const {
    GiantNumber v = power(0, fraction);
    if (v.is_zero()) return GiantNumber(1);
    return v > largest_residue_ ? largest_residue_ : v;
  }

 private:
  static std::size_t decimal_width(std::size_t n) {
    std::size_t w = 1;
    while (n >= 10) {
      n /= 10;
      ++w;
    }
    return w;
  }

  // ln(10^k - 1) = k ln 10 + log1p(-10^-k)
  void init_ln_base(detail::BigFloat& target) const {
    detail::BigFloat tail(target.precision());
    mpfr_set_ui(tail.get(), 10, MPFR_RNDN);
    mpfr_pow_si(tail.get(), tail.get(), -static_cast<long>(base_.nines()), MPFR_RNDN);
    mpfr_neg(tail.get(), tail.get(), MPFR_RNDN);
    mpfr_log1p(tail.get(), tail.get(), MPFR_RNDN);
    mpfr_set_ui(target.get(), 10, MPFR_RNDN);
    mpfr_log(target.get(), target.get(), MPFR_RNDN);
    mpfr_mul_ui(target.get(), target.get(), base_.nines(), MPFR_RNDN);
    mpfr_add(target.get(), target.get(), tail.get(), MPFR_RNDN);
  }

  DefaultNumber base_;
  GiantNumber largest_residue_;
  std::size_t precision_;
  mpfr_prec_t log_bits_;
  mpfr_prec_t exp_bits_;
  detail::BigFloat ln_base_log_;
  detail::BigFloat ln_base_exp_;
  detail::BigFloat scale_;
};

inline LogFraction log_base_default(const GiantNumber& r, const DefaultNumber& d, std::size_t precision) {
  return LogContext(d, precision).log(r);
}

inline GiantNumber antilog_default(const LogFraction& fraction, const DefaultNumber& d) {
  return LogContext(d, fraction.precision()).antilog(fraction);
}

}  // namespace ldcl

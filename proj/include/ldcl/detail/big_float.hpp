#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

namespace ldcl::detail {

/// Bits needed to carry `digits` significant decimal digits, plus a margin.
inline mpfr_prec_t bits_for_digits(std::size_t digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

/// Owning handle to an mpfr_t with a fixed precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); mpfr_set_zero(value_, 1); }

  BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// Owning handle to an mpz_t.
class BigInt {
 public:
  BigInt() { mpz_init(value_); }
  explicit BigInt(const std::string& decimal) { mpz_init_set_str(value_, decimal.c_str(), 10); }
  BigInt(const BigInt&) = delete;
  BigInt& operator=(const BigInt&) = delete;
  ~BigInt() { mpz_clear(value_); }

  mpz_ptr get() noexcept { return value_; }
  mpz_srcptr get() const noexcept { return value_; }

  std::string to_string() const {
    std::string out(mpz_sizeinbase(value_, 10) + 2, '\0');
    mpz_get_str(out.data(), 10, value_);
    out.resize(std::char_traits<char>::length(out.c_str()));
    return out;
  }

 private:
  mpz_t value_;
};

}  // namespace ldcl::detail

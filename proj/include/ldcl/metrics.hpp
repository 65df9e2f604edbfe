#pragma once

// Compression ratio (original / compressed) and RMSE over per-set integer
// values. Set values run to hundreds of digits, so the squared differences
// are summed exactly and only the final square root is rounded.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ldcl/detail/big_float.hpp"
#include "ldcl/error.hpp"
#include "ldcl/giant_number.hpp"

namespace ldcl {

class CompressionRatio {
 public:
  CompressionRatio(std::uint64_t original_bytes, std::uint64_t compressed_bytes)
      : original_(original_bytes), compressed_(compressed_bytes) {}

  std::uint64_t original_bytes() const noexcept { return original_; }
  std::uint64_t compressed_bytes() const noexcept { return compressed_; }
  double value() const noexcept { return static_cast<double>(original_) / static_cast<double>(compressed_); }

  /// Two decimals, rounded half-up in exact integer arithmetic.
  std::string to_string() const {
    using u128 = unsigned __int128;
    const u128 hundredths = (static_cast<u128>(original_) * 200 + compressed_) / (static_cast<u128>(compressed_) * 2);
    const auto whole = static_cast<std::uint64_t>(hundredths / 100);
    const auto frac = static_cast<unsigned>(hundredths % 100);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%llu.%02u", static_cast<unsigned long long>(whole), frac);
    return buf;
  }

 private:
  std::uint64_t original_;
  std::uint64_t compressed_;
};

inline CompressionRatio compression_ratio(std::uint64_t original_bytes, std::uint64_t compressed_bytes) {
  if (compressed_bytes == 0) throw Error(ErrorKind::kDomain, "compressed size must be at least one byte");
  return CompressionRatio(original_bytes, compressed_bytes);
}

/// A non-negative real carried with 256 bits of precision.
class RmseValue {
 public:
  static constexpr mpfr_prec_t kBits = 256;

  RmseValue() : value_(kBits) {}

  static RmseValue from_string(const std::string& decimal) {
    RmseValue v;
    if (mpfr_set_str(v.value_.get(), decimal.c_str(), 10, MPFR_RNDN) != 0) {
      throw Error(ErrorKind::kValidation, "not a decimal number: " + decimal);
    }
    return v;
  }

  bool is_zero() const noexcept { return mpfr_zero_p(value_.get()) != 0; }
  double to_double() const noexcept { return mpfr_get_d(value_.get(), MPFR_RNDN); }

  /// "d.ddE+xx" style with `significant` digits, e.g. 1.80E+296.
  std::string to_scientific(int significant = 3) const {
    significant = std::max(significant, 1);
    if (is_zero()) {
      return significant == 1 ? "0E+00" : "0." + std::string(static_cast<std::size_t>(significant - 1), '0') + "E+00";
    }
    mpfr_exp_t exponent = 0;
    char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(significant), value_.get(), MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string out(1, digits[0]);
    if (digits.size() > 1) out += "." + digits.substr(1);
    const long e = static_cast<long>(exponent) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "E%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
    return out + buf;
  }

  friend std::strong_ordering operator<=>(const RmseValue& a, const RmseValue& b) noexcept {
    const int c = mpfr_cmp(a.value_.get(), b.value_.get());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const RmseValue& a, const RmseValue& b) noexcept { return (a <=> b) == 0; }

  friend RmseValue midpoint(const RmseValue& a, const RmseValue& b) {
    RmseValue out;
    mpfr_add(out.value_.get(), a.value_.get(), b.value_.get(), MPFR_RNDN);
    mpfr_div_2ui(out.value_.get(), out.value_.get(), 1, MPFR_RNDN);
    return out;
  }

 private:
  friend RmseValue rmse(std::span<const GiantNumber>, std::span<const GiantNumber>);

  detail::BigFloat value_;
};

/// sqrt((1/|V|) * sum (l_j - t_j)^2)
inline RmseValue rmse(std::span<const GiantNumber> original, std::span<const GiantNumber> reconstructed) {
  if (original.size() != reconstructed.size()) throw Error(ErrorKind::kValidation, "set lists differ in length");
  if (original.empty()) throw Error(ErrorKind::kDomain, "RMSE over an empty set list");

  detail::BigInt sum;
  detail::BigInt diff;
  detail::BigInt tmp;
  for (std::size_t i = 0; i < original.size(); ++i) {
    mpz_set_str(diff.get(), original[i].digits().c_str(), 10);
    mpz_set_str(tmp.get(), reconstructed[i].digits().c_str(), 10);
    mpz_sub(diff.get(), diff.get(), tmp.get());
    mpz_addmul(sum.get(), diff.get(), diff.get());
  }

  RmseValue out;
  mpfr_set_z(out.value_.get(), sum.get(), MPFR_RNDN);
  mpfr_div_ui(out.value_.get(), out.value_.get(), static_cast<unsigned long>(original.size()), MPFR_RNDN);
  mpfr_sqrt(out.value_.get(), out.value_.get(), MPFR_RNDN);
  return out;
}

/// Median with the usual midpoint for even counts.
inline RmseValue median(std::vector<RmseValue> values) {
  if (values.empty()) throw Error(ErrorKind::kDomain, "median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return midpoint(values[mid - 1], values[mid]);
}

struct MetricsReport {
  std::uint64_t original_bytes = 0;
  std::uint64_t compressed_bytes = 0;
  std::size_t set_count = 0;
  std::size_t compared_sets = 0;  // |V|
  RmseValue rmse;

  /// CR; 0.00 is shown for an empty original, where the ratio is degenerate.
  std::string cr_display() const {
    if (original_bytes == 0 || compressed_bytes == 0) return "0.00";
    return compression_ratio(original_bytes, compressed_bytes).to_string();
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "original_bytes   " << original_bytes << '\n'
       << "compressed_bytes " << compressed_bytes << '\n'
       << "cr               " << cr_display() << '\n'
       << "set_count        " << set_count << '\n'
       << "compared_sets    " << compared_sets << '\n'
       << "rmse             " << rmse.to_scientific(3) << '\n';
    return os.str();
  }

  static std::string csv_header() { return "original_bytes,compressed_bytes,cr,rmse,set_count,compared_sets"; }

  std::string to_csv_row() const {
    std::ostringstream os;
    os << original_bytes << ',' << compressed_bytes << ',' << cr_display() << ',' << rmse.to_scientific(3) << ','
       << set_count << ',' << compared_sets;
    return os.str();
  }
};

}  // namespace ldcl

#pragma once

// Brute-force references for the tests. Nothing here shares code with the
// arithmetic it checks: subtraction runs on GMP integers, and the round-trip
// sweep compares against plain enumeration.

#include <gmp.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ldcl/giant_number.hpp"
#include "ldcl/matrix_codec.hpp"

namespace ldcl::oracle {

struct OracleConfig {
  std::size_t max_set_digits = 6;
  std::uint64_t seed = 20151031;
};

/// Literal repeated subtraction of D until the value drops below D.
inline std::pair<std::uint64_t, GiantNumber> naive_subtract_count(const GiantNumber& s, const DefaultNumber& d) {
  mpz_t value, divisor;
  mpz_init_set_str(value, s.digits().c_str(), 10);
  mpz_init(divisor);
  mpz_ui_pow_ui(divisor, 10, d.nines());
  mpz_sub_ui(divisor, divisor, 1);

  std::uint64_t count = 0;
  while (mpz_cmp(value, divisor) >= 0) {
    mpz_sub(value, value, divisor);
    ++count;
  }
  std::string rest(mpz_sizeinbase(value, 10) + 2, '\0');
  mpz_get_str(rest.data(), 10, value);
  rest.resize(std::char_traits<char>::length(rest.c_str()));
  mpz_clear(value);
  mpz_clear(divisor);
  return {count, GiantNumber::from_digits(rest)};
}

struct RoundtripReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  // |original - reconstructed| -> number of sets with that distortion
  std::map<std::uint64_t, std::size_t> distortion;
};

/// Every digit string of length `set_size` over 1..9 through
/// compress_sets/reconstruct_sets.
inline RoundtripReport exhaustive_roundtrip(std::size_t set_size, std::size_t precision,
                                            const OracleConfig& config = {}) {
  if (set_size > config.max_set_digits) throw Error(ErrorKind::kValidation, "set size above the oracle bound");
  std::vector<DigitString> sets;
  std::string digits(set_size, '1');
  while (true) {
    sets.push_back(digits);
    std::size_t i = set_size;
    while (i > 0 && digits[i - 1] == '9') digits[--i] = '1';
    if (i == 0) break;
    ++digits[i - 1];
  }

  const CodecParams params{std::max<std::size_t>(set_size, 2), precision, MultiplierProfile::kRaw};
  const std::vector<DigitString> rebuilt = reconstruct_sets(compress_sets(sets, params), params);

  RoundtripReport report;
  report.cases = sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::uint64_t a = std::stoull(sets[i]);
    const std::uint64_t b = std::stoull(rebuilt[i]);
    const std::uint64_t diff = a > b ? a - b : b - a;
    if (diff != 0) ++report.failures;
    ++report.distortion[diff];
  }
  return report;
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t count) {
  std::vector<std::uint8_t> bits(count);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return bits;
}

/// Mapped digits built from runs whose lengths include the RLE edge cases.
inline std::string random_mapped_runs(std::mt19937_64& rng, std::size_t runs) {
  static constexpr std::size_t kLengths[] = {1, 2, 3, 4, 5, 6, 9, 10, 13, 14, 18, 19, 23};
  std::string out;
  char prev = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    char x;
    do {
      x = static_cast<char>('2' + rng() % 4);
    } while (x == prev);
    out.append(kLengths[rng() % std::size(kLengths)], x);
    prev = x;
  }
  return out;
}

}  // namespace ldcl::oracle

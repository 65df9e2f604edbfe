#include <gtest/gtest.h>

#include <random>
#include <string>

#include "ldcl/giant_number.hpp"
#include "support/oracle.hpp"

using namespace ldcl;

namespace {
GiantNumber num(const char* digits) { return GiantNumber::from_digits(digits); }
}  // namespace

TEST(GiantNumber, NormalizesLeadingZeros) {
  EXPECT_EQ(num("000123").digits(), "123");
  EXPECT_EQ(num("0000").digits(), "0");
  EXPECT_TRUE(num("0").is_zero());
  EXPECT_THROW(GiantNumber::from_digits(""), Error);
  EXPECT_THROW(GiantNumber::from_digits("12a"), Error);
}

TEST(GiantNumber, Ordering) {
  EXPECT_LT(num("99"), num("100"));
  EXPECT_LT(num("123"), num("124"));
  EXPECT_EQ(num("0042"), num("42"));
}

TEST(GiantNumber, ArithmeticAgainstMachineIntegers) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() >> 2;
    const std::uint64_t b = rng() >> 2;
    const std::uint64_t k = rng() % 1000;
    EXPECT_EQ((GiantNumber(a) + GiantNumber(b)).to_u64(), a + b);
    EXPECT_EQ((GiantNumber(std::max(a, b)) - GiantNumber(std::min(a, b))).to_u64(), std::max(a, b) - std::min(a, b));
    EXPECT_EQ((GiantNumber(a >> 12) * k).to_u64(), (a >> 12) * k);
  }
  EXPECT_THROW(GiantNumber(1) - GiantNumber(2), Error);
}

TEST(DefaultNumber, Repunit) {
  EXPECT_EQ(DefaultNumber(3).value(), num("999"));
  EXPECT_EQ(DefaultNumber::for_set_length(300).nines(), 299u);
  EXPECT_THROW(DefaultNumber(0), Error);
}

TEST(DivmodDefault, Examples) {
  EXPECT_EQ(divmod_default(num("5324"), DefaultNumber(3)), (DivModResult{5, num("329")}));
  EXPECT_EQ(divmod_default(num("1998"), DefaultNumber(3)), (DivModResult{2, num("0")}));
  EXPECT_EQ(divmod_default(num("100"), DefaultNumber(2)), (DivModResult{1, num("1")}));
}

TEST(DivmodDefault, ZeroIsOutsideTheDomain) {
  try {
    divmod_default(GiantNumber(), DefaultNumber(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(DivmodDefault, AgreesWithRepeatedSubtractionOnLongSets) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t len = 2 + rng() % 120;
    std::string digits;
    for (std::size_t j = 0; j < len; ++j) digits.push_back(static_cast<char>('1' + rng() % 9));
    const GiantNumber s = GiantNumber::from_digits(digits);
    const DefaultNumber d = DefaultNumber::for_set_length(len);
    const auto [m, r] = oracle::naive_subtract_count(s, d);
    const DivModResult got = divmod_default(s, d);
    ASSERT_EQ(got.multiplier, m) << digits;
    ASSERT_EQ(got.remainder, r) << digits;
    ASSERT_GE(got.multiplier, 1u);
    ASSERT_LE(got.multiplier, len == 2 ? 11u : 10u);
  }
}

TEST(AddMultiples, Examples) {
  EXPECT_EQ(add_multiples(num("329"), 5, DefaultNumber(3)), num("5324"));
  EXPECT_EQ(add_multiples(GiantNumber(), 1, DefaultNumber(3)), num("999"));
  EXPECT_EQ(add_multiples(num("1"), 0, DefaultNumber(3)), num("1"));
}

TEST(AddMultiples, InvertsDivmodForAllSmallValues) {
  for (std::size_t nines : {1u, 2u, 3u}) {
    const DefaultNumber d(nines);
    for (std::uint64_t s = 1; s <= 9999; ++s) {
      const GiantNumber value(s);
      const DivModResult qr = divmod_default(value, d);
      ASSERT_EQ(add_multiples(qr.remainder, qr.multiplier, d), value) << s << " / " << nines;
    }
  }
}

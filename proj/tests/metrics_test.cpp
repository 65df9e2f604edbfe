#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ldcl/metrics.hpp"

using namespace ldcl;

namespace {
std::vector<GiantNumber> nums(std::initializer_list<std::uint64_t> values) {
  std::vector<GiantNumber> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}
}  // namespace

TEST(CompressionRatio, TableValues) {
  EXPECT_EQ(compression_ratio(3'221'225'472, 53'687'091).to_string(), "60.00");
  EXPECT_EQ(compression_ratio(1'073'741'824, 57'266'240).to_string(), "18.75");
  EXPECT_EQ(compression_ratio(500, 500).to_string(), "1.00");
  EXPECT_NEAR(compression_ratio(1'073'741'824, 57'266'240).value(), 18.7499969266, 1e-9);
}

TEST(CompressionRatio, HalfUpRounding) {
  EXPECT_EQ(compression_ratio(1005, 1000).to_string(), "1.01");
  EXPECT_EQ(compression_ratio(1004, 1000).to_string(), "1.00");
  EXPECT_EQ(compression_ratio(0, 36).to_string(), "0.00");
  EXPECT_THROW(compression_ratio(10, 0), Error);
}

TEST(Rmse, HandComputedLists) {
  EXPECT_TRUE(rmse(nums({5, 7}), nums({5, 7})).is_zero());
  EXPECT_EQ(rmse(nums({329}), nums({330})).to_scientific(12), "1.00000000000E+00");
  // sqrt((9 + 16) / 2) = 3.5355339059327376220...
  EXPECT_EQ(rmse(nums({10, 20}), nums({13, 16})).to_scientific(12), "3.53553390593E+00");
}

TEST(Rmse, HugeSetValues) {
  const GiantNumber a = GiantNumber::from_digits("1" + std::string(299, '0'));
  const GiantNumber b = GiantNumber::from_digits("3" + std::string(299, '0'));
  // |a - b| = 2e299 for the single pair.
  EXPECT_EQ(rmse(std::vector{a}, std::vector{b}).to_scientific(3), "2.00E+299");
}

TEST(Rmse, Errors) {
  EXPECT_THROW(rmse(nums({1}), nums({1, 2})), Error);
  EXPECT_THROW(rmse(nums({}), nums({})), Error);
}

TEST(Rmse, SymmetryPermutationAndScaling) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GiantNumber> a, b, a_scaled, b_scaled;
    const std::uint64_t k = 1 + rng() % 1000;
    const std::size_t n = 1 + rng() % 20;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t x = rng() % 1'000'000;
      const std::uint64_t y = rng() % 1'000'000;
      a.emplace_back(x);
      b.emplace_back(y);
      a_scaled.emplace_back(x * k);
      b_scaled.emplace_back(y * k);
    }
    const RmseValue base = rmse(a, b);
    EXPECT_EQ(base, rmse(b, a));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<GiantNumber> pa, pb;
    for (auto i : order) {
      pa.push_back(a[i]);
      pb.push_back(b[i]);
    }
    EXPECT_EQ(base.to_scientific(40), rmse(pa, pb).to_scientific(40));

    EXPECT_NEAR(rmse(a_scaled, b_scaled).to_double(), base.to_double() * static_cast<double>(k),
                1e-12 * base.to_double() * static_cast<double>(k));
  }
}

TEST(Rmse, ScientificFormatting) {
  EXPECT_EQ(RmseValue::from_string("1.8e296").to_scientific(3), "1.80E+296");
  EXPECT_EQ(RmseValue::from_string("0.000123456").to_scientific(3), "1.23E-04");
  EXPECT_EQ(RmseValue().to_scientific(3), "0.00E+00");
}

TEST(Median, OddAndEvenCounts) {
  std::vector<RmseValue> v;
  for (const char* s : {"5", "1", "3"}) v.push_back(RmseValue::from_string(s));
  EXPECT_EQ(median(v), RmseValue::from_string("3"));
  v.push_back(RmseValue::from_string("4"));
  EXPECT_EQ(median(v), RmseValue::from_string("3.5"));
  EXPECT_THROW(median({}), Error);
}

TEST(MetricsReport, Rendering) {
  MetricsReport r;
  r.original_bytes = 1000;
  r.compressed_bytes = 400;
  r.set_count = 3;
  r.compared_sets = 3;
  r.rmse = RmseValue::from_string("12345");
  EXPECT_EQ(r.to_csv_row(), "1000,400,2.50,1.23E+04,3,3");
  EXPECT_NE(r.to_text().find("cr               2.50"), std::string::npos);
}

#include <gtest/gtest.h>

#include <string>

#include "ldcl/bench.hpp"

using namespace ldcl;

TEST(RandomBytes, DeterministicPerSeed) {
  EXPECT_EQ(random_bytes(37, 9), random_bytes(37, 9));
  EXPECT_NE(random_bytes(37, 9), random_bytes(37, 10));
  EXPECT_EQ(random_bytes(13, 1).size(), 13u);
}

TEST(Evaluate, CompressedBytesMatchArchiveSize) {
  const auto input = random_bytes(3000, 4);
  const CodecParams params{40, 6, MultiplierProfile::kRaw};
  const Evaluation e = evaluate(input, params);
  EXPECT_EQ(e.report.compressed_bytes, e.archive_bytes.size());
  EXPECT_EQ(e.report.original_bytes, 3000u);
  EXPECT_EQ(e.reconstructed.size(), input.size());
  EXPECT_FALSE(e.report.rmse.is_zero());
}

TEST(Evaluate, EmptyInput) {
  const Evaluation e = evaluate({}, CodecParams{});
  EXPECT_EQ(e.report.compressed_bytes, 40u);
  EXPECT_EQ(e.report.cr_display(), "0.00");
  EXPECT_TRUE(e.report.rmse.is_zero());
}

TEST(RunBench, SingleCellSingleRow) {
  BenchSpec spec;
  spec.set_sizes = {20};
  spec.precisions = {4};
  spec.random_byte_count = 2000;
  const auto rows = run_bench(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].error);
}

TEST(RunBench, LosslessColumnHasZeroRmseAndRowOrder) {
  BenchSpec spec;
  spec.set_sizes = {10, 20};
  spec.precisions = {3, 25};
  spec.trials = 2;
  spec.random_byte_count = 1500;
  const auto rows = run_bench(spec, Execution::with_threads(4));
  ASSERT_EQ(rows.size(), 8u);
  std::size_t i = 0;
  for (std::size_t t : {10u, 20u}) {
    for (std::size_t p : {3u, 25u}) {
      for (std::size_t trial = 0; trial < 2; ++trial, ++i) {
        EXPECT_EQ(rows[i].set_size, t);
        EXPECT_EQ(rows[i].precision, p);
        EXPECT_EQ(rows[i].trial, trial);
        if (p >= t + 5) EXPECT_TRUE(rows[i].rmse.is_zero());
      }
    }
  }
}

TEST(RunBench, DeterministicCsv) {
  BenchSpec spec;
  spec.set_sizes = {30};
  spec.precisions = {5};
  spec.trials = 3;
  spec.random_byte_count = 1000;
  spec.seed = 77;
  auto render = [&] {
    std::string out;
    for (const auto& row : run_bench(spec)) out += bench_csv_row(row) + "\n";
    return out;
  };
  EXPECT_EQ(render(), render());
}

TEST(RunBench, CsvRowShape) {
  BenchRow row;
  row.set_size = 300;
  row.precision = 12;
  row.trial = 0;
  row.original_bytes = 1048576;
  row.compressed_bytes = 181091;
  row.rmse = RmseValue::from_string("8.04e288");
  EXPECT_EQ(bench_csv_header(), "T,p,trial,original_bytes,compressed_bytes,cr,rmse");
  EXPECT_EQ(bench_csv_row(row), "300,12,0,1048576,181091,5.79,8.04E+288");
  row.error = "bad, input";
  EXPECT_EQ(bench_csv_row(row), "300,12,0,1048576,,ERROR,bad  input");
}

TEST(RunBench, FailingCellIsRecordedAndSweepContinues) {
  BenchSpec spec;
  spec.set_sizes = {20};
  spec.precisions = {4};
  spec.input_file = "/nonexistent/ldcl-input";
  EXPECT_THROW(run_bench(spec), Error);  // input itself unreadable

  spec.input_file.reset();
  spec.random_byte_count = 500;
  spec.precisions = {4, 70000};  // second precision exceeds the header field
  const auto rows = run_bench(spec);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].error);
  EXPECT_TRUE(rows[1].error);
}

// ldcl: command-line front end for the logarithmic lossy codec.
//
//   ldcl compress   <input> <output.ldcl> [--set-size T] [--precision p] [--m-log]
//   ldcl decompress <input.ldcl> <output>
//   ldcl inspect    <input.ldcl> [--records N]
//   ldcl metrics    <original> <input.ldcl> [--csv]
//   ldcl bench      [--set-size T...] [--precision p...] [--input F | --random-bytes N]
//                   [--seed S] [--trials N] [--csv out.csv] [--m-log]
//
// Exit status: 0 success, 1 usage, 2 I/O, 3 format or corruption.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ldcl/ldcl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

int exit_code_for(ldcl::ErrorKind kind) {
  switch (kind) {
    case ldcl::ErrorKind::kIo: return kExitIo;
    default: return kExitFormat;
  }
}

ldcl::Execution execution_for(unsigned threads) {
  return threads == 0 ? ldcl::Execution::hardware() : ldcl::Execution::with_threads(threads);
}

ldcl::Archive load_archive(const std::filesystem::path& path) {
  return ldcl::decode_archive(ldcl::read_file(path));
}

int run_compress(const std::filesystem::path& input, const std::filesystem::path& output,
                 const ldcl::CodecParams& params, ldcl::Execution exec) {
  const std::vector<std::uint8_t> bytes = ldcl::read_file(input);
  const ldcl::Archive archive = ldcl::compress(ldcl::BitSequence::from_bytes(bytes), params, exec);
  const std::vector<std::uint8_t> encoded = ldcl::encode_archive(archive);
  ldcl::write_file(output, encoded);

  std::string cr = "0.00";
  if (bytes.empty()) {
    std::cerr << "warning: empty input, the compression ratio is degenerate; reporting 0.00\n";
  } else {
    cr = ldcl::compression_ratio(bytes.size(), encoded.size()).to_string();
  }
  std::cout << "original_bytes=" << bytes.size() << " compressed_bytes=" << encoded.size() << " cr=" << cr
            << " sets=" << archive.matrix.set_count() << '\n';
  return kExitOk;
}

int run_decompress(const std::filesystem::path& input, const std::filesystem::path& output, ldcl::Execution exec) {
  const ldcl::Archive archive = load_archive(input);
  const ldcl::BitSequence bits = ldcl::decompress(archive, exec);
  ldcl::write_file(output, bits.to_bytes());
  return kExitOk;
}

int run_inspect(const std::filesystem::path& input, std::size_t max_records) {
  const ldcl::Archive a = load_archive(input);
  const bool log_profile = a.params.profile == ldcl::MultiplierProfile::kLog;
  const unsigned flags = (a.odd_pad ? ldcl::container::kFlagOddPad : 0u) |
                         (log_profile ? ldcl::container::kFlagLogMultiplier : 0u);

  std::cout << "magic          LDCL\n"
            << "version        " << unsigned{ldcl::container::kVersion} << '\n'
            << "flags          0x" << std::hex << flags << std::dec << " (odd_pad=" << a.odd_pad
            << ", m_profile=" << (log_profile ? "log" : "raw") << ")\n"
            << "set_size       " << a.params.set_size << '\n'
            << "precision      " << a.params.precision << '\n'
            << "bit_length     " << a.original_bit_length << '\n'
            << "mapped_digits  " << a.mapped_digit_length << '\n'
            << "set_count      " << a.matrix.set_count() << '\n'
            << "last_set_len   " << a.last_set_digit_len() << '\n';

  const ldcl::SetRecord* first = nullptr;
  const ldcl::SetRecord* last = nullptr;
  for (const auto& rec : a.matrix.records) {
    if (rec.is_verbatim()) continue;
    if (!first) first = &rec;
    last = &rec;
  }
  if (first) {
    std::cout << "first_log      " << first->residue_log.to_string() << '\n'
              << "last_log       " << last->residue_log.to_string() << '\n';
  }

  const std::size_t shown = max_records == 0 ? a.matrix.set_count() : std::min(max_records, a.matrix.set_count());
  std::cout << "records (" << shown << " of " << a.matrix.set_count() << ")\n";
  for (std::size_t i = 0; i < shown; ++i) {
    const ldcl::SetRecord& rec = a.matrix.records[i];
    std::cout << "  #" << i << " len=" << rec.digit_len;
    if (rec.is_verbatim()) {
      std::cout << " verbatim=" << *rec.verbatim_digit << '\n';
      continue;
    }
    if (log_profile) {
      std::cout << " m(log-encoded)=" << rec.multiplier << "+" << rec.multiplier_log.to_string();
    } else {
      std::cout << " m=" << rec.multiplier;
    }
    std::cout << " zero_residue=" << rec.r_is_zero << " log=" << rec.residue_log.to_string() << '\n';
  }
  return kExitOk;
}

int run_metrics(const std::filesystem::path& original, const std::filesystem::path& archive_path, bool csv,
                ldcl::Execution exec) {
  const std::vector<std::uint8_t> bytes = ldcl::read_file(original);
  const std::vector<std::uint8_t> encoded = ldcl::read_file(archive_path);
  const ldcl::Archive archive = ldcl::decode_archive(encoded);
  const ldcl::BitSequence bits = ldcl::BitSequence::from_bytes(bytes);
  if (bits.bit_length() != archive.original_bit_length) {
    throw ldcl::Error(ldcl::ErrorKind::kValidation, "archive was not produced from this input (bit lengths differ)");
  }
  const ldcl::MetricsReport report = ldcl::measure(bits, archive, bytes.size(), encoded.size(), exec);
  if (bytes.empty()) std::cerr << "warning: empty input, the compression ratio is degenerate; reporting 0.00\n";
  if (csv) {
    std::cout << ldcl::MetricsReport::csv_header() << '\n' << report.to_csv_row() << '\n';
  } else {
    std::cout << report.to_text();
  }
  return kExitOk;
}

int run_bench(const ldcl::BenchSpec& spec, const std::string& csv_path, ldcl::Execution exec) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!csv_path.empty()) {
    file.open(csv_path, std::ios::trunc);
    if (!file) throw ldcl::Error(ldcl::ErrorKind::kIo, "cannot create " + csv_path);
    out = &file;
  }
  *out << "# ldcl bench " << spec.describe_source() << " trials=" << spec.trials << '\n'
       << ldcl::bench_csv_header() << '\n';
  std::size_t failures = 0;
  ldcl::run_bench(spec, exec, [&](const ldcl::BenchRow& row) {
    if (row.error) ++failures;
    *out << ldcl::bench_csv_row(row) << '\n';
    out->flush();
  });
  if (!*out) throw ldcl::Error(ldcl::ErrorKind::kIo, "failed writing CSV output");
  if (failures > 0) std::cerr << "warning: " << failures << " bench cell(s) failed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lossy data compression with base-D logarithms of digit sets"};
  app.require_subcommand(1);

  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for per-set stages (0 = all cores)")->capture_default_str();

  std::string input;
  std::string output;
  ldcl::CodecParams params;
  bool m_log = false;

  auto* compress = app.add_subcommand("compress", "Compress a file into an .ldcl archive");
  compress->add_option("input", input, "File to compress")->required();
  compress->add_option("output", output, "Archive to write")->required();
  compress->add_option("--set-size", params.set_size, "Digits per set (T)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{UINT32_MAX}));
  compress->add_option("--precision", params.precision, "Stored log fraction digits (p)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{UINT16_MAX}));
  compress->add_flag("--m-log", m_log, "Store the multiplier row as logarithms too");

  auto* decompress = app.add_subcommand("decompress", "Reconstruct a file from an .ldcl archive");
  decompress->add_option("input", input, "Archive to read")->required();
  decompress->add_option("output", output, "File to write")->required();

  std::size_t max_records = 16;
  auto* inspect = app.add_subcommand("inspect", "Dump archive header and set records");
  inspect->add_option("input", input, "Archive to read")->required();
  inspect->add_option("--records", max_records, "Records to list (0 = all)")->capture_default_str();

  bool csv = false;
  auto* metrics = app.add_subcommand("metrics", "Compression ratio and RMSE of an archive against its original");
  metrics->add_option("original", input, "Original file")->required();
  metrics->add_option("archive", output, "Archive produced from it")->required();
  metrics->add_flag("--csv", csv, "Emit CSV instead of text");

  ldcl::BenchSpec spec;
  std::string bench_input;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Sweep set sizes and precisions, writing CSV rows");
  bench->add_option("--set-size", spec.set_sizes, "Set sizes to sweep")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{UINT32_MAX}));
  bench->add_option("--precision", spec.precisions, "Precisions to sweep")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{UINT16_MAX}));
  auto* in_opt = bench->add_option("--input", bench_input, "Benchmark this file instead of random data")
                     ->check(CLI::ExistingFile);
  bench->add_option("--random-bytes", spec.random_byte_count, "Size of each random trial input")
      ->capture_default_str()
      ->excludes(in_opt);
  bench->add_option("--seed", spec.seed, "PRNG seed; trial t uses seed + t")->capture_default_str();
  bench->add_option("--trials", spec.trials, "Repetitions per grid cell")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "CSV output path (default stdout)");
  bench->add_flag("--m-log", m_log, "Store the multiplier row as logarithms too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const ldcl::MultiplierProfile profile = m_log ? ldcl::MultiplierProfile::kLog : ldcl::MultiplierProfile::kRaw;
  const ldcl::Execution exec = execution_for(threads);
  try {
    if (*compress) {
      params.profile = profile;
      return run_compress(input, output, params, exec);
    }
    if (*decompress) return run_decompress(input, output, exec);
    if (*inspect) return run_inspect(input, max_records);
    if (*metrics) return run_metrics(input, output, csv, exec);
    if (*bench) {
      spec.profile = profile;
      if (!bench_input.empty()) spec.input_file = bench_input;
      return run_bench(spec, csv_path, exec);
    }
  } catch (const ldcl::Error& e) {
    std::cerr << "ldcl: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ldcl: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

#pragma once

// Round-trip evaluation of one input and the parameter-sweep runner behind
// `ldcl bench`.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ldcl/container.hpp"
#include "ldcl/error.hpp"
#include "ldcl/matrix_codec.hpp"
#include "ldcl/metrics.hpp"

namespace ldcl {

struct Evaluation {
  MetricsReport report;
  std::vector<std::uint8_t> archive_bytes;
  std::vector<std::uint8_t> reconstructed;
};

/// RMSE between the sets the compressor saw and the sets rebuilt from the
/// archive, before repair and run-length decoding.
inline MetricsReport measure(const BitSequence& original, const Archive& archive, std::uint64_t original_bytes,
                             std::uint64_t compressed_bytes, Execution exec = Execution::sequential()) {
  const std::vector<DigitString> before = original_sets(original, archive.params.set_size);
  const std::vector<DigitString> after = reconstruct_sets(archive.matrix, archive.params, exec);
  if (before.size() != after.size()) {
    throw Error(ErrorKind::kValidation, "archive does not belong to this input (set counts differ)");
  }

  MetricsReport report;
  report.original_bytes = original_bytes;
  report.compressed_bytes = compressed_bytes;
  report.set_count = archive.matrix.set_count();
  report.compared_sets = before.size();
  if (!before.empty()) {
    std::vector<GiantNumber> l;
    std::vector<GiantNumber> t;
    l.reserve(before.size());
    t.reserve(after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
      l.push_back(GiantNumber::from_digits(before[i]));
      t.push_back(GiantNumber::from_digits(after[i]));
    }
    report.rmse = rmse(l, t);
  }
  return report;
}

inline Evaluation evaluate(const std::vector<std::uint8_t>& input, const CodecParams& params,
                           Execution exec = Execution::sequential()) {
  const BitSequence bits = BitSequence::from_bytes(input);
  const Archive archive = compress(bits, params, exec);

  Evaluation out;
  out.archive_bytes = encode_archive(archive);
  const Archive stored = decode_archive(out.archive_bytes);
  out.reconstructed = decompress(stored, exec).to_bytes();
  out.report = measure(bits, stored, input.size(), out.archive_bytes.size(), exec);
  return out;
}

/// Deterministic pseudo-random bytes: successive mt19937_64 outputs, each
/// split into eight bytes, most significant first.
inline std::vector<std::uint8_t> random_bytes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<std::uint8_t> out(count);
  for (std::size_t i = 0; i < count; i += 8) {
    std::uint64_t word = engine();
    for (std::size_t b = 0; b < 8 && i + b < count; ++b) out[i + b] = static_cast<std::uint8_t>(word >> (56 - 8 * b));
  }
  return out;
}

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::kIo, "failed reading " + path.string());
  return bytes;
}

inline void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

struct BenchSpec {
  std::vector<std::size_t> set_sizes{300};
  std::vector<std::size_t> precisions{12};
  MultiplierProfile profile = MultiplierProfile::kRaw;
  std::optional<std::filesystem::path> input_file;  // otherwise random input
  std::size_t random_byte_count = 1 << 20;
  std::uint64_t seed = 1;
  std::size_t trials = 1;

  void validate() const {
    if (set_sizes.empty() || precisions.empty()) throw Error(ErrorKind::kValidation, "bench grid is empty");
    for (auto t : set_sizes) {
      if (t < 2) throw Error(ErrorKind::kValidation, "set sizes must be at least 2");
    }
    for (auto p : precisions) {
      if (p < 1) throw Error(ErrorKind::kValidation, "precisions must be at least 1");
    }
    if (trials < 1) throw Error(ErrorKind::kValidation, "trials must be at least 1");
  }

  /// Trial t of a random corpus uses seed + t, so every grid cell sees the
  /// same inputs.
  std::vector<std::uint8_t> trial_input(std::size_t trial) const {
    if (input_file) return read_file(*input_file);
    return random_bytes(random_byte_count, seed + trial);
  }

  std::string describe_source() const {
    if (input_file) return "input=" + input_file->string();
    return "prng=mt19937_64 seed=" + std::to_string(seed) + " random_bytes=" + std::to_string(random_byte_count);
  }
};

struct BenchRow {
  std::size_t set_size = 0;
  std::size_t precision = 0;
  std::size_t trial = 0;
  std::uint64_t original_bytes = 0;
  std::uint64_t compressed_bytes = 0;
  RmseValue rmse;
  std::optional<std::string> error;

  std::string cr_display() const {
    if (original_bytes == 0 || compressed_bytes == 0) return "0.00";
    return compression_ratio(original_bytes, compressed_bytes).to_string();
  }
};

inline std::string bench_csv_header() { return "T,p,trial,original_bytes,compressed_bytes,cr,rmse"; }

inline std::string bench_csv_row(const BenchRow& row) {
  std::string out = std::to_string(row.set_size) + "," + std::to_string(row.precision) + "," +
                    std::to_string(row.trial) + "," + std::to_string(row.original_bytes) + ",";
  if (row.error) {
    std::string msg = *row.error;
    for (char& c : msg) {
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    }
    return out + ",ERROR," + msg;
  }
  return out + std::to_string(row.compressed_bytes) + "," + row.cr_display() + "," + row.rmse.to_scientific(3);
}

/// Runs every (T, p, trial) cell in that order. A failing cell yields an
/// error row and the sweep continues. `on_row` sees rows as they complete.
inline std::vector<BenchRow> run_bench(const BenchSpec& spec, Execution exec = Execution::sequential(),
                                       const std::function<void(const BenchRow&)>& on_row = {}) {
  spec.validate();
  std::vector<std::vector<std::uint8_t>> inputs;
  inputs.reserve(spec.trials);
  for (std::size_t t = 0; t < spec.trials; ++t) inputs.push_back(spec.trial_input(t));

  std::vector<BenchRow> rows;
  for (auto set_size : spec.set_sizes) {
    for (auto precision : spec.precisions) {
      for (std::size_t trial = 0; trial < spec.trials; ++trial) {
        BenchRow row;
        row.set_size = set_size;
        row.precision = precision;
        row.trial = trial;
        row.original_bytes = inputs[trial].size();
        try {
          const CodecParams params{set_size, precision, spec.profile};
          const Evaluation eval = evaluate(inputs[trial], params, exec);
          row.compressed_bytes = eval.report.compressed_bytes;
          row.rmse = eval.report.rmse;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        if (on_row) on_row(row);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace ldcl

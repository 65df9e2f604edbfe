#pragma once

// The end-to-end codec.
//
// Compression: bits -> mapped digits -> run-length digits -> sets of T digits.
// Each set s of length L >= 2 is reduced against D = 10^(L-1) - 1 as
// s = m*D + r and stored as the pair (m, log_D r) with p fraction digits.
// Reconstruction runs the chain backwards; digits damaged by the lossy log
// step are repaired before the strict run-length decoder sees them.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldcl/error.hpp"
#include "ldcl/giant_number.hpp"
#include "ldcl/logarithm.hpp"
#include "ldcl/parallel.hpp"
#include "ldcl/sequence_codec.hpp"

namespace ldcl {

using DigitString = std::string;

enum class MultiplierProfile : std::uint8_t {
  kRaw,  // m stored as a small integer
  kLog,  // m stored as log_D m with the same precision as the residue
};

struct CodecParams {
  std::size_t set_size = 300;  // T
  std::size_t precision = 12;  // p
  MultiplierProfile profile = MultiplierProfile::kRaw;

  void validate() const {
    if (set_size < 2 || set_size > UINT32_MAX) throw Error(ErrorKind::kValidation, "set size must be in [2, 2^32)");
    if (precision < 1 || precision > UINT16_MAX) throw Error(ErrorKind::kValidation, "precision must be in [1, 65535]");
  }

  friend bool operator==(const CodecParams&, const CodecParams&) = default;
};

/// Largest multiplier a set of `digit_len` digits can produce: 99 = 11*9 is
/// the only case above ten.
inline unsigned max_multiplier(std::size_t digit_len) { return digit_len == 2 ? 11u : 10u; }

/// One column of the 2 x n matrix.
struct SetRecord {
  std::size_t digit_len = 0;
  unsigned multiplier = 0;     // raw profile: m; log profile: integer part of log_D m
  LogFraction multiplier_log;  // log profile only
  LogFraction residue_log;     // all zeros when r_is_zero
  bool r_is_zero = false;
  std::optional<char> verbatim_digit;  // single-digit sets only

  bool is_verbatim() const noexcept { return verbatim_digit.has_value(); }

  friend bool operator==(const SetRecord&, const SetRecord&) = default;
};

struct LogMatrix {
  std::vector<SetRecord> records;

  std::size_t set_count() const noexcept { return records.size(); }
  std::size_t total_digits() const noexcept {
    std::size_t n = 0;
    for (const auto& r : records) n += r.digit_len;
    return n;
  }

  friend bool operator==(const LogMatrix&, const LogMatrix&) = default;
};

/// The compressed representation together with everything reconstruction needs.
struct Archive {
  CodecParams params;
  bool odd_pad = false;
  std::uint64_t original_bit_length = 0;
  std::uint64_t mapped_digit_length = 0;
  LogMatrix matrix;

  std::size_t last_set_digit_len() const noexcept {
    return matrix.records.empty() ? 0 : matrix.records.back().digit_len;
  }

  friend bool operator==(const Archive&, const Archive&) = default;
};

/// Structural checks shared by the pipeline and the container reader.
inline void validate_archive(const Archive& archive) {
  archive.params.validate();
  const auto& p = archive.params;
  if (archive.mapped_digit_length != (archive.original_bit_length + 1) / 2) {
    throw Error(ErrorKind::kValidation, "mapped digit length does not match the bit length");
  }
  if (archive.odd_pad != (archive.original_bit_length % 2 == 1)) {
    throw Error(ErrorKind::kValidation, "odd-length flag does not match the bit length");
  }
  if ((archive.mapped_digit_length == 0) != archive.matrix.records.empty()) {
    throw Error(ErrorKind::kValidation, "set count inconsistent with the mapped length");
  }
  const auto& records = archive.matrix.records;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SetRecord& rec = records[i];
    const bool last = i + 1 == records.size();
    if (rec.digit_len == 0 || rec.digit_len > p.set_size || (!last && rec.digit_len != p.set_size)) {
      throw Error(ErrorKind::kValidation, "set " + std::to_string(i) + " has an invalid digit length");
    }
    if (rec.is_verbatim() != (rec.digit_len == 1)) {
      throw Error(ErrorKind::kValidation, "verbatim storage is reserved for single-digit sets");
    }
    if (rec.is_verbatim()) {
      if (*rec.verbatim_digit < '1' || *rec.verbatim_digit > '9') {
        throw Error(ErrorKind::kValidation, "verbatim digit out of range");
      }
      continue;
    }
    if (rec.residue_log.precision() != p.precision) {
      throw Error(ErrorKind::kValidation, "residue log has the wrong precision");
    }
    if (rec.r_is_zero && !rec.residue_log.is_zero()) {
      throw Error(ErrorKind::kValidation, "zero-residue record carries a non-zero log");
    }
    if (p.profile == MultiplierProfile::kRaw) {
      if (rec.multiplier < 1 || rec.multiplier > max_multiplier(rec.digit_len)) {
        throw Error(ErrorKind::kValidation, "multiplier out of range in set " + std::to_string(i));
      }
    } else {
      if (rec.multiplier > (rec.digit_len == 2 ? 1u : 0u) || rec.multiplier_log.precision() != p.precision) {
        throw Error(ErrorKind::kValidation, "log-encoded multiplier out of range in set " + std::to_string(i));
      }
    }
  }
}

/// Positional split into consecutive sets of `set_size` digits; the last set
/// holds the remainder.
inline std::vector<DigitString> decompose_sets(const RleDigits& stream, std::size_t set_size) {
  if (set_size < 1) throw Error(ErrorKind::kValidation, "set size must be positive");
  std::vector<DigitString> sets;
  sets.reserve((stream.digits.size() + set_size - 1) / set_size);
  for (std::size_t pos = 0; pos < stream.digits.size(); pos += set_size) {
    sets.push_back(stream.digits.substr(pos, set_size));
  }
  return sets;
}

inline DigitString assemble_titan(const std::vector<DigitString>& sets) {
  std::size_t total = 0;
  for (const auto& s : sets) total += s.size();
  DigitString titan;
  titan.reserve(total);
  for (const auto& s : sets) titan += s;
  return titan;
}

namespace detail {

/// One LogContext per distinct set length >= 2, built before any worker runs.
class ContextTable {
 public:
  ContextTable(const std::vector<std::size_t>& lengths, std::size_t precision) {
    for (auto len : lengths) {
      if (len >= 2 && !contexts_.contains(len)) {
        contexts_.emplace(len, std::make_unique<LogContext>(DefaultNumber::for_set_length(len), precision));
      }
    }
  }

  const LogContext& at(std::size_t len) const { return *contexts_.at(len); }

 private:
  std::map<std::size_t, std::unique_ptr<LogContext>> contexts_;
};

inline SetRecord compress_one(const DigitString& set, const CodecParams& params, const ContextTable& contexts) {
  if (set.empty() || set.size() > params.set_size) {
    throw Error(ErrorKind::kValidation, "set length outside [1, T]");
  }
  for (char c : set) {
    if (c < '1' || c > '9') throw Error(ErrorKind::kAlphabet, std::string("set digit '") + c + "' is not in 1..9");
  }

  SetRecord rec;
  rec.digit_len = set.size();
  if (set.size() == 1) {
    rec.verbatim_digit = set[0];
    return rec;
  }

  const LogContext& ctx = contexts.at(set.size());
  const DivModResult qr = divmod_default(GiantNumber::from_digits(set), ctx.base());
  rec.r_is_zero = qr.remainder.is_zero();
  rec.residue_log = rec.r_is_zero ? LogFraction::zero(params.precision) : ctx.log(qr.remainder);
  if (params.profile == MultiplierProfile::kRaw) {
    rec.multiplier = static_cast<unsigned>(qr.multiplier);
  } else {
    SplitLog m_log = ctx.log_split(GiantNumber(qr.multiplier));
    rec.multiplier = m_log.integer_part;
    rec.multiplier_log = std::move(m_log.fraction);
  }
  return rec;
}

inline DigitString reconstruct_one(const SetRecord& rec, const CodecParams& params, const ContextTable& contexts) {
  if (rec.is_verbatim()) return DigitString(1, *rec.verbatim_digit);

  const LogContext& ctx = contexts.at(rec.digit_len);
  const GiantNumber residue = rec.r_is_zero ? GiantNumber() : ctx.antilog(rec.residue_log);
  std::uint64_t m = rec.multiplier;
  if (params.profile == MultiplierProfile::kLog) {
    const GiantNumber raw = ctx.power(rec.multiplier, rec.multiplier_log);
    const GiantNumber cap(max_multiplier(rec.digit_len));
    m = raw.is_zero() ? 1 : (raw > cap ? cap.to_u64() : raw.to_u64());
  }

  const GiantNumber value = add_multiples(residue, m, ctx.base());
  // Loss can push a value past the set width (saturate) or below it (pad).
  if (value.digit_count() > rec.digit_len) return DigitString(rec.digit_len, '9');
  DigitString out(rec.digit_len - value.digit_count(), '0');
  out += value.digits();
  return out;
}

}  // namespace detail

inline LogMatrix compress_sets(const std::vector<DigitString>& sets, const CodecParams& params,
                               Execution exec = Execution::sequential()) {
  params.validate();
  std::vector<std::size_t> lengths;
  for (const auto& s : sets) {
    if (lengths.empty() || lengths.back() != s.size()) lengths.push_back(s.size());
  }
  const detail::ContextTable contexts(lengths, params.precision);

  LogMatrix matrix;
  matrix.records.resize(sets.size());
  parallel_for(sets.size(), exec, [&](std::size_t i) {
    matrix.records[i] = detail::compress_one(sets[i], params, contexts);
  });
  return matrix;
}

inline std::vector<DigitString> reconstruct_sets(const LogMatrix& matrix, const CodecParams& params,
                                                 Execution exec = Execution::sequential()) {
  params.validate();
  std::vector<std::size_t> lengths;
  for (const auto& r : matrix.records) {
    if (lengths.empty() || lengths.back() != r.digit_len) lengths.push_back(r.digit_len);
  }
  const detail::ContextTable contexts(lengths, params.precision);

  std::vector<DigitString> sets(matrix.records.size());
  parallel_for(sets.size(), exec, [&](std::size_t i) {
    sets[i] = detail::reconstruct_one(matrix.records[i], params, contexts);
  });
  return sets;
}

/// Turns an arbitrary digit string into a strictly decodable run-length
/// stream of exactly `expected_len` digits. Well-formed "1 x n 1" tokens are
/// kept; every other digit moves to the nearest member of 2..5.
inline RleDigits repair_digits(std::string_view raw, std::size_t expected_len) {
  RleDigits out;
  out.digits.assign(raw.substr(0, expected_len));
  out.digits.resize(expected_len, '2');

  std::string& d = out.digits;
  std::size_t i = 0;
  while (i < d.size()) {
    if (rle::token_at(d, i)) {
      i += rle::kTokenLength;
      continue;
    }
    if (d[i] < '2') {
      d[i] = '2';
    } else if (d[i] > '5') {
      d[i] = '5';
    }
    ++i;
  }
  return out;
}

inline Archive compress(const BitSequence& input, const CodecParams& params,
                        Execution exec = Execution::sequential()) {
  params.validate();
  const MappedDigits mapped = map_bits(input);
  const RleDigits stream = rle_encode(mapped);

  Archive archive;
  archive.params = params;
  archive.odd_pad = mapped.odd_pad;
  archive.original_bit_length = input.bit_length();
  archive.mapped_digit_length = mapped.digits.size();
  archive.matrix = compress_sets(decompose_sets(stream, params.set_size), params, exec);
  return archive;
}

inline BitSequence decompress(const Archive& archive, Execution exec = Execution::sequential()) {
  validate_archive(archive);
  const DigitString titan = assemble_titan(reconstruct_sets(archive.matrix, archive.params, exec));
  const RleDigits stream = repair_digits(titan, archive.matrix.total_digits());

  MappedDigits mapped = rle_decode(stream);
  mapped.digits.resize(archive.mapped_digit_length, '2');
  mapped.odd_pad = archive.odd_pad;

  BitSequence bits = unmap_digits(mapped);
  bits.resize(archive.original_bit_length);
  return bits;
}

/// The exact set values the compressor reduces, for distortion measurement.
inline std::vector<DigitString> original_sets(const BitSequence& input, std::size_t set_size) {
  return decompose_sets(rle_encode(map_bits(input)), set_size);
}

}  // namespace ldcl

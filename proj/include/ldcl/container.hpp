#pragma once

// .ldcl archive layout (all integers big-endian):
//
//   offset size  field
//   0      4     magic "LDCL"
//   4      1     version (1)
//   5      1     flags: bit0 odd_pad, bit1 log-encoded multipliers
//   6      4     set size T
//   10     2     precision p
//   12     8     original bit length
//   20     8     mapped digit length
//   28     4     set count n
//   32     4     digit length of the last set (0 when n == 0)
//   36     ...   n set records
//   end-4  4     CRC-32 of every preceding byte
//
// Set record: one m byte, then the payload.
//   m byte 0xFF: verbatim single-digit set, payload is 1 ASCII digit.
//   otherwise:   bit7 = zero residue, low nibble = m (raw profile) or the
//                integer part of log_D m (log profile); payload is p ASCII
//                digits of log_D r, followed in the log profile by p ASCII
//                digits of the fraction of log_D m.

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ldcl/error.hpp"
#include "ldcl/matrix_codec.hpp"

namespace ldcl {

namespace container {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'L', 'D', 'C', 'L'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 36;
inline constexpr std::size_t kTrailerSize = 4;
inline constexpr std::uint8_t kFlagOddPad = 0x01;
inline constexpr std::uint8_t kFlagLogMultiplier = 0x02;
inline constexpr std::uint8_t kVerbatimMarker = 0xFF;
inline constexpr std::uint8_t kZeroResidueBit = 0x80;

inline std::uint32_t crc32(std::span<const std::uint8_t> bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large buffers in pieces.
  constexpr std::size_t kChunk = 1u << 30;
  for (std::size_t pos = 0; pos < bytes.size(); pos += kChunk) {
    const std::size_t len = std::min(kChunk, bytes.size() - pos);
    crc = ::crc32(crc, bytes.data() + pos, static_cast<uInt>(len));
  }
  return static_cast<std::uint32_t>(crc);
}

inline std::size_t record_size(std::size_t digit_len, std::size_t precision, MultiplierProfile profile) {
  if (digit_len == 1) return 2;
  return 1 + precision * (profile == MultiplierProfile::kLog ? 2 : 1);
}

/// Exact byte count of an archive with `set_count` records whose last
/// record holds `last_len` digits.
inline std::size_t archive_size(std::size_t set_count, std::size_t last_len, std::size_t precision,
                                MultiplierProfile profile) {
  std::size_t size = kHeaderSize + kTrailerSize;
  if (set_count > 0) {
    // Every non-last set is full-width, and full-width sets are never verbatim.
    size += (set_count - 1) * record_size(2, precision, profile);
    size += record_size(last_len, precision, profile);
  }
  return size;
}

namespace wire {

template <typename T>
void put_be(std::vector<std::uint8_t>& out, T value) {
  for (int shift = static_cast<int>(sizeof(T) * 8) - 8; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(value >> shift));
  }
}

template <typename T>
T get_be(std::span<const std::uint8_t> in, std::size_t pos) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v = static_cast<T>((v << 8) | in[pos + i]);
  return v;
}

inline LogFraction read_fraction(std::span<const std::uint8_t> in, std::size_t pos, std::size_t precision) {
  std::string digits(reinterpret_cast<const char*>(in.data() + pos), precision);
  for (char c : digits) {
    if (c < '0' || c > '9') throw Error(ErrorKind::kValidation, "non-digit byte in log payload");
  }
  return LogFraction::from_digits(digits);
}

}  // namespace wire

}  // namespace container

inline std::vector<std::uint8_t> encode_archive(const Archive& archive) {
  using namespace container;
  validate_archive(archive);
  const CodecParams& p = archive.params;
  const bool log_profile = p.profile == MultiplierProfile::kLog;

  std::vector<std::uint8_t> out;
  out.reserve(archive_size(archive.matrix.set_count(), archive.last_set_digit_len(), p.precision, p.profile));
  out.insert(out.end(), kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>((archive.odd_pad ? kFlagOddPad : 0) | (log_profile ? kFlagLogMultiplier : 0)));
  wire::put_be(out, static_cast<std::uint32_t>(p.set_size));
  wire::put_be(out, static_cast<std::uint16_t>(p.precision));
  wire::put_be(out, archive.original_bit_length);
  wire::put_be(out, archive.mapped_digit_length);
  wire::put_be(out, static_cast<std::uint32_t>(archive.matrix.set_count()));
  wire::put_be(out, static_cast<std::uint32_t>(archive.last_set_digit_len()));

  for (const SetRecord& rec : archive.matrix.records) {
    if (rec.is_verbatim()) {
      out.push_back(kVerbatimMarker);
      out.push_back(static_cast<std::uint8_t>(*rec.verbatim_digit));
      continue;
    }
    out.push_back(static_cast<std::uint8_t>((rec.r_is_zero ? kZeroResidueBit : 0) | (rec.multiplier & 0x0F)));
    out.insert(out.end(), rec.residue_log.digits().begin(), rec.residue_log.digits().end());
    if (log_profile) out.insert(out.end(), rec.multiplier_log.digits().begin(), rec.multiplier_log.digits().end());
  }

  wire::put_be(out, crc32(out));
  return out;
}

inline Archive decode_archive(std::span<const std::uint8_t> in) {
  using namespace container;
  if (in.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), in.begin())) {
    throw Error(ErrorKind::kUnsupported, "bad magic, not an LDCL archive");
  }
  if (in.size() < kMagic.size() + 1) throw Error(ErrorKind::kTruncation, "archive ends inside the header");
  if (in[4] != kVersion) throw Error(ErrorKind::kUnsupported, "unsupported archive version " + std::to_string(in[4]));
  if (in.size() < kHeaderSize + kTrailerSize) throw Error(ErrorKind::kTruncation, "archive ends inside the header");

  const std::uint8_t flags = in[5];
  Archive archive;
  archive.params.set_size = wire::get_be<std::uint32_t>(in, 6);
  archive.params.precision = wire::get_be<std::uint16_t>(in, 10);
  archive.params.profile = (flags & kFlagLogMultiplier) ? MultiplierProfile::kLog : MultiplierProfile::kRaw;
  archive.odd_pad = (flags & kFlagOddPad) != 0;
  archive.original_bit_length = wire::get_be<std::uint64_t>(in, 12);
  archive.mapped_digit_length = wire::get_be<std::uint64_t>(in, 20);
  const std::uint32_t set_count = wire::get_be<std::uint32_t>(in, 28);
  const std::uint32_t last_len = wire::get_be<std::uint32_t>(in, 32);

  const std::size_t expected = archive_size(set_count, last_len, archive.params.precision, archive.params.profile);
  if (in.size() < expected) throw Error(ErrorKind::kTruncation, "archive is shorter than its header declares");
  if (in.size() > expected) throw Error(ErrorKind::kValidation, "trailing bytes after the archive");

  const std::uint32_t stored_crc = wire::get_be<std::uint32_t>(in, expected - kTrailerSize);
  if (crc32(in.first(expected - kTrailerSize)) != stored_crc) {
    throw Error(ErrorKind::kCorruption, "CRC-32 mismatch");
  }

  if ((flags & ~(kFlagOddPad | kFlagLogMultiplier)) != 0) throw Error(ErrorKind::kValidation, "unknown flag bits set");
  archive.params.validate();
  if ((set_count == 0) != (last_len == 0) || last_len > archive.params.set_size) {
    throw Error(ErrorKind::kValidation, "last set length out of range");
  }

  const std::size_t p = archive.params.precision;
  const bool log_profile = archive.params.profile == MultiplierProfile::kLog;
  archive.matrix.records.resize(set_count);
  std::size_t pos = kHeaderSize;
  for (std::uint32_t i = 0; i < set_count; ++i) {
    SetRecord& rec = archive.matrix.records[i];
    rec.digit_len = (i + 1 == set_count) ? last_len : archive.params.set_size;
    const std::uint8_t m_byte = in[pos++];
    if (rec.digit_len == 1) {
      if (m_byte != kVerbatimMarker) throw Error(ErrorKind::kValidation, "single-digit set without verbatim marker");
      rec.verbatim_digit = static_cast<char>(in[pos++]);
      continue;
    }
    if ((m_byte & 0x70) != 0) throw Error(ErrorKind::kValidation, "reserved m-byte bits set in set " + std::to_string(i));
    rec.r_is_zero = (m_byte & kZeroResidueBit) != 0;
    rec.multiplier = m_byte & 0x0F;
    rec.residue_log = wire::read_fraction(in, pos, p);
    pos += p;
    if (log_profile) {
      rec.multiplier_log = wire::read_fraction(in, pos, p);
      pos += p;
    }
  }

  validate_archive(archive);
  return archive;
}

/// Writes the archive and returns the byte count, the compressed size.
inline std::size_t write_archive(const Archive& archive, std::ostream& sink) {
  const std::vector<std::uint8_t> bytes = encode_archive(archive);
  sink.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!sink) throw Error(ErrorKind::kIo, "failed to write archive");
  return bytes.size();
}

inline Archive read_archive(std::istream& source) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  if (source.bad()) throw Error(ErrorKind::kIo, "failed to read archive");
  return decode_archive(bytes);
}

}  // namespace ldcl

#pragma once

// Conversion between raw bit streams and the run-length reduced digit stream.
//
//   bits --map_bits--> MappedDigits (alphabet 2..5) --rle_encode--> RleDigits
//
// Bit pairs map 00->2, 01->3, 10->4, 11->5. An odd-length input is extended
// with a leading 1 and the odd_pad flag records it. Runs of five or more
// equal digits become four-digit tokens "1 x n 1" with n in 5..9; longer runs
// are split into several tokens plus a literal tail of at most four digits.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ldcl/error.hpp"

namespace ldcl {

class BitSequence {
 public:
  BitSequence() = default;

  /// Bits are 0/1 values; anything else is rejected.
  explicit BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw Error(ErrorKind::kAlphabet, "bit value must be 0 or 1");
    }
  }

  /// Parses a string of '0'/'1' characters.
  static BitSequence from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw Error(ErrorKind::kAlphabet, "bit string may only hold 0 and 1");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitSequence(std::move(bits));
  }

  /// Unpacks bytes most-significant bit first.
  static BitSequence from_bytes(std::span<const std::uint8_t> bytes) {
    BitSequence out;
    out.bits_.resize(bytes.size() * 8);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      for (int b = 0; b < 8; ++b) {
        out.bits_[i * 8 + static_cast<std::size_t>(b)] = (bytes[i] >> (7 - b)) & 1u;
      }
    }
    return out;
  }

  /// Packs MSB first; a trailing partial byte is zero-filled on the right.
  std::vector<std::uint8_t> to_bytes() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
    return out;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
  }

  std::size_t bit_length() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Truncates, or zero-pads on the right, to exactly `length` bits.
  void resize(std::size_t length) { bits_.resize(length, 0); }

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct MappedDigits {
  std::string digits;  // ASCII '2'..'5'
  bool odd_pad = false;

  friend bool operator==(const MappedDigits&, const MappedDigits&) = default;
};

struct RleDigits {
  std::string digits;  // ASCII '1'..'9'

  friend bool operator==(const RleDigits&, const RleDigits&) = default;
};

namespace rle {

inline constexpr std::size_t kMinRun = 5;
inline constexpr std::size_t kMaxRun = 9;
inline constexpr std::size_t kTokenLength = 4;
inline constexpr char kSentinel = '1';

inline bool is_mapped_digit(char c) noexcept { return c >= '2' && c <= '5'; }
inline bool is_count_digit(char c) noexcept { return c >= '5' && c <= '9'; }

/// True when digits[pos..pos+3] is a complete "1 x n 1" token.
inline bool token_at(std::string_view digits, std::size_t pos) noexcept {
  return pos + kTokenLength <= digits.size() && digits[pos] == kSentinel &&
         is_mapped_digit(digits[pos + 1]) && is_count_digit(digits[pos + 2]) &&
         digits[pos + 3] == kSentinel;
}

}  // namespace rle

inline MappedDigits map_bits(const BitSequence& input) {
  static constexpr char kPairDigit[4] = {'2', '3', '4', '5'};
  MappedDigits out;
  const std::size_t n = input.bit_length();
  out.odd_pad = (n % 2) == 1;
  out.digits.reserve((n + 1) / 2);

  std::size_t pos = 0;
  if (out.odd_pad) {
    out.digits.push_back(kPairDigit[2 | input[0]]);
    pos = 1;
  }
  for (; pos < n; pos += 2) {
    out.digits.push_back(kPairDigit[(input[pos] << 1) | input[pos + 1]]);
  }
  return out;
}

inline BitSequence unmap_digits(const MappedDigits& input) {
  std::vector<std::uint8_t> bits;
  bits.reserve(input.digits.size() * 2);
  for (char c : input.digits) {
    if (!rle::is_mapped_digit(c)) {
      throw Error(ErrorKind::kAlphabet, std::string("mapped digit '") + c + "' is not in 2..5");
    }
    const int pair = c - '2';
    bits.push_back(static_cast<std::uint8_t>(pair >> 1));
    bits.push_back(static_cast<std::uint8_t>(pair & 1));
  }
  if (input.odd_pad) {
    if (bits.empty()) throw Error(ErrorKind::kValidation, "odd_pad set on an empty digit stream");
    bits.erase(bits.begin());
  }
  return BitSequence(std::move(bits));
}

inline RleDigits rle_encode(const MappedDigits& input) {
  const std::string& in = input.digits;
  RleDigits out;
  out.digits.reserve(in.size());

  std::size_t i = 0;
  while (i < in.size()) {
    const char x = in[i];
    if (!rle::is_mapped_digit(x)) {
      throw Error(ErrorKind::kAlphabet, std::string("mapped digit '") + x + "' is not in 2..5");
    }
    std::size_t j = i;
    while (j < in.size() && in[j] == x) ++j;
    std::size_t run = j - i;
    while (run >= rle::kMinRun) {
      const std::size_t n = std::min(run, rle::kMaxRun);
      out.digits.push_back(rle::kSentinel);
      out.digits.push_back(x);
      out.digits.push_back(static_cast<char>('0' + n));
      out.digits.push_back(rle::kSentinel);
      run -= n;
    }
    out.digits.append(run, x);
    i = j;
  }
  return out;
}

/// Strict decoder: any digit outside a well-formed token must be 2..5.
inline MappedDigits rle_decode(const RleDigits& input) {
  const std::string& in = input.digits;
  MappedDigits out;
  out.digits.reserve(in.size());

  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (c == rle::kSentinel) {
      if (!rle::token_at(in, i)) {
        throw Error(ErrorKind::kParse, "malformed run token at digit " + std::to_string(i));
      }
      out.digits.append(static_cast<std::size_t>(in[i + 2] - '0'), in[i + 1]);
      i += rle::kTokenLength;
    } else if (rle::is_mapped_digit(c)) {
      out.digits.push_back(c);
      ++i;
    } else {
      throw Error(ErrorKind::kParse,
                  std::string("digit '") + c + "' outside a run token at digit " + std::to_string(i));
    }
  }
  return out;
}

}  // namespace ldcl

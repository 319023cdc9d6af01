#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

/// A string of bits of arbitrary length.
///
/// Bit i lives at bytes()[i / 8], position (i % 8), LSB first. Unused high
/// bits of the last byte are kept zero so equality is plain memberwise
/// comparison. Lengths are not restricted to byte multiples; shuffle
/// payloads slice intermediate values at arbitrary bit offsets.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t bit_count) : bits_(bit_count), bytes_((bit_count + 7) / 8) {}

  std::size_t size() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value);
  void flip_bit(std::size_t i);

  /// Appends `word`'s low `count` bits (count <= 64), low bit first.
  void append_word(std::uint64_t word, std::size_t count);
  void append(const BitString& other);

  BitString slice(std::size_t offset, std::size_t count) const;

  /// In-place XOR; both operands must have the same length.
  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }

  bool operator==(const BitString& other) const = default;

  /// Lowercase hex of the underlying bytes (two digits per byte).
  std::string hex() const;
  static BitString from_hex(std::string_view hex_digits, std::size_t bit_count);

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace scc

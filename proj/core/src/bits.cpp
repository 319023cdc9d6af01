#include "scc/bits.hpp"

#include <stdexcept>

namespace scc {

bool BitString::bit(std::size_t i) const {
  if (i >= bits_) throw std::out_of_range("bitstring: index past end");
  return (bytes_[i >> 3] >> (i & 7)) & 1;
}

void BitString::set_bit(std::size_t i, bool value) {
  if (i >= bits_) throw std::out_of_range("bitstring: index past end");
  std::uint8_t mask = std::uint8_t(1) << (i & 7);
  if (value) {
    bytes_[i >> 3] |= mask;
  } else {
    bytes_[i >> 3] &= std::uint8_t(~mask);
  }
}

void BitString::flip_bit(std::size_t i) {
  if (i >= bits_) throw std::out_of_range("bitstring: index past end");
  bytes_[i >> 3] ^= std::uint8_t(1) << (i & 7);
}

void BitString::append_word(std::uint64_t word, std::size_t count) {
  if (count > 64) throw std::invalid_argument("bitstring: word wider than 64 bits");
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t pos = bits_ + i;
    if ((pos >> 3) >= bytes_.size()) bytes_.push_back(0);
    if ((word >> i) & 1) bytes_[pos >> 3] |= std::uint8_t(1) << (pos & 7);
  }
  bits_ += count;
}

void BitString::append(const BitString& other) {
  if ((bits_ & 7) == 0) {
    // Byte-aligned fast path.
    std::size_t old_bytes = bits_ >> 3;
    bytes_.resize(old_bytes + other.bytes_.size());
    for (std::size_t i = 0; i < other.bytes_.size(); ++i) bytes_[old_bytes + i] = other.bytes_[i];
    bits_ += other.bits_;
    return;
  }
  for (std::size_t i = 0; i < other.bits_; ++i) {
    std::size_t pos = bits_ + i;
    if ((pos >> 3) >= bytes_.size()) bytes_.push_back(0);
    if (other.bit(i)) bytes_[pos >> 3] |= std::uint8_t(1) << (pos & 7);
  }
  bits_ += other.bits_;
}

BitString BitString::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > bits_) throw std::out_of_range("bitstring: slice past end");
  BitString out(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t pos = offset + i;
    if ((bytes_[pos >> 3] >> (pos & 7)) & 1) out.bytes_[i >> 3] |= std::uint8_t(1) << (i & 7);
  }
  return out;
}

BitString& BitString::operator^=(const BitString& other) {
  if (bits_ != other.bits_) throw std::invalid_argument("bitstring: xor length mismatch");
  for (std::size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

std::string BitString::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex_digits, std::size_t bit_count) {
  if (hex_digits.size() != ((bit_count + 7) / 8) * 2) {
    throw std::invalid_argument("bitstring: hex length does not match bit count");
  }
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return std::uint8_t(c - '0');
    if (c >= 'a' && c <= 'f') return std::uint8_t(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return std::uint8_t(c - 'A' + 10);
    throw std::invalid_argument("bitstring: bad hex digit");
  };
  BitString out(bit_count);
  for (std::size_t i = 0; i < out.bytes_.size(); ++i) {
    out.bytes_[i] = std::uint8_t((nibble(hex_digits[2 * i]) << 4) | nibble(hex_digits[2 * i + 1]));
  }
  // Trailing bits past bit_count must be zero.
  if (bit_count & 7) {
    std::uint8_t mask = std::uint8_t((1u << (bit_count & 7)) - 1);
    if (out.bytes_.back() & ~mask) throw std::invalid_argument("bitstring: nonzero padding bits");
  }
  return out;
}

}  // namespace scc

#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspn {

using Bytes = std::vector<uint8_t>;

// Bit vectors are kept as one element per bit (0/1). Packing convention,
// used everywhere bits meet bytes: bit j lives in byte j/8 at position
// 7 - j%8 (MSB-first).
using BitVec = std::vector<uint8_t>;

inline Bytes to_bytes(const std::string& s) {
  return Bytes(s.begin(), s.end());
}

inline std::string to_string(const Bytes& b) {
  return std::string(b.begin(), b.end());
}

inline BitVec bytes_to_bits(const Bytes& in) {
  BitVec out;
  out.reserve(in.size() * 8);
  for (uint8_t byte : in)
    for (int j = 7; j >= 0; --j) out.push_back((byte >> j) & 1);
  return out;
}

inline Bytes bits_to_bytes(const BitVec& bits) {
  Bytes out((bits.size() + 7) / 8, 0);
  for (size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) out[j / 8] |= uint8_t(1u << (7 - j % 8));
  return out;
}

inline std::string to_hex(const Bytes& b) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(b.size() * 2);
  for (uint8_t v : b) {
    s.push_back(digits[v >> 4]);
    s.push_back(digits[v & 0xf]);
  }
  return s;
}

inline Bytes from_hex(const std::string& s) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (s.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
  Bytes out(s.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = nib(s[2 * i]), lo = nib(s[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
    out[i] = uint8_t(hi << 4 | lo);
  }
  return out;
}

// Little-endian serialization helpers shared by every on-disk format.
class ByteWriter {
 public:
  const Bytes& data() const { return buf_; }
  Bytes take() { return std::move(buf_); }

  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v) {
    for (int i = 0; i < 2; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(uint8_t(v >> (8 * i)));
  }
  void raw(const Bytes& b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
  void raw(const uint8_t* p, size_t n) { buf_.insert(buf_.end(), p, p + n); }
  // u32 length prefix + contents
  void lp(const Bytes& b) {
    u32(uint32_t(b.size()));
    raw(b);
  }
  void lp(const std::string& s) { lp(to_bytes(s)); }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(const Bytes& b) : buf_(b) {}

  bool done() const { return pos_ == buf_.size(); }
  size_t remaining() const { return buf_.size() - pos_; }

  uint8_t u8() { return take(1)[0]; }
  uint16_t u16() { return uint16_t(le(2)); }
  uint32_t u32() { return uint32_t(le(4)); }
  uint64_t u64() { return le(8); }
  Bytes raw(size_t n) { return take(n); }
  Bytes lp() { return take(u32()); }
  std::string lp_str() {
    Bytes b = lp();
    return to_string(b);
  }

 private:
  uint64_t le(int n) {
    Bytes b = take(size_t(n));
    uint64_t v = 0;
    for (int i = n - 1; i >= 0; --i) v = v << 8 | b[size_t(i)];
    return v;
  }
  Bytes take(size_t n) {
    if (n > remaining()) throw std::out_of_range("truncated input");
    Bytes out(buf_.begin() + long(pos_), buf_.begin() + long(pos_ + n));
    pos_ += n;
    return out;
  }
  const Bytes& buf_;
  size_t pos_ = 0;
};

inline bool contains_subsequence(const Bytes& haystack, const Bytes& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (size_t i = 0; i + needle.size() <= haystack.size(); ++i)
    if (std::memcmp(haystack.data() + i, needle.data(), needle.size()) == 0) return true;
  return false;
}

}  // namespace aspn

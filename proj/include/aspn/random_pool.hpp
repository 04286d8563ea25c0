#pragma once

#include <array>
#include <cstdint>

#include "aspn/bytes.hpp"

namespace aspn {

// Deterministic bit source seeded by the 16-byte license ID. The stream is
// sha256(seed || le64(0)) || sha256(seed || le64(1)) || ... consumed
// MSB-first within each byte; every fingerprinting decision draws from it,
// which is what makes builds reproducible per license.
class RandomPool {
 public:
  explicit RandomPool(const std::array<uint8_t, 16>& seed);

  // next n bits, packed MSB-first (bits_to_bytes convention); n may be 0
  Bytes take_bits(uint64_t n);
  uint8_t take_bit();
  // next n <= 64 bits as an integer (MSB of the draw is the high bit)
  uint64_t take_u64(int n);
  Bytes take_bytes(size_t n);
  // uniform draw in [0, bound) by rejection over ceil(log2(bound))-bit draws
  uint64_t uniform(uint64_t bound);

  uint64_t bits_drawn() const { return counter_; }

 private:
  void refill();

  std::array<uint8_t, 16> seed_;
  uint64_t block_index_ = 0;
  Bytes block_;
  size_t bit_pos_ = 0;    // next unread bit within block_
  uint64_t counter_ = 0;  // total bits drawn
};

}  // namespace aspn

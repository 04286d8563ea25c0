#include "aspn/random_pool.hpp"

#include "aspn/crypto.hpp"
#include "aspn/error.hpp"

namespace aspn {

RandomPool::RandomPool(const std::array<uint8_t, 16>& seed) : seed_(seed) {}

void RandomPool::refill() {
  Bytes input(seed_.begin(), seed_.end());
  ByteWriter w;
  w.raw(input);
  w.u64(block_index_++);
  block_ = hash_suite(0x01).apply(w.take());
  bit_pos_ = 0;
}

uint8_t RandomPool::take_bit() {
  if (bit_pos_ >= block_.size() * 8) refill();
  uint8_t bit = (block_[bit_pos_ / 8] >> (7 - bit_pos_ % 8)) & 1;
  ++bit_pos_;
  ++counter_;
  return bit;
}

Bytes RandomPool::take_bits(uint64_t n) {
  BitVec bits;
  bits.reserve(size_t(n));
  for (uint64_t i = 0; i < n; ++i) bits.push_back(take_bit());
  return bits_to_bytes(bits);
}

uint64_t RandomPool::take_u64(int n) {
  if (n < 0 || n > 64) throw ParamError("pool draw must be 0..64 bits");
  uint64_t v = 0;
  for (int i = 0; i < n; ++i) v = v << 1 | take_bit();
  return v;
}

Bytes RandomPool::take_bytes(size_t n) { return take_bits(uint64_t(n) * 8); }

uint64_t RandomPool::uniform(uint64_t bound) {
  if (bound == 0) throw ParamError("uniform bound must be positive");
  if (bound == 1) return 0;
  int bits = 0;
  while ((uint64_t(1) << bits) < bound) ++bits;
  for (;;) {
    uint64_t v = take_u64(bits);
    if (v < bound) return v;
  }
}

}  // namespace aspn

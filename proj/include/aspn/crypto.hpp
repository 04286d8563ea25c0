#pragma once

#include <functional>
#include <memory>
#include <string>

#include "aspn/bytes.hpp"

namespace aspn {

// A key is a bit string of exactly `bits` bits packed MSB-first into
// ceil(bits/8) bytes; unused trailing bit positions are zero.
struct Key {
  Bytes bytes;
  int bits = 0;

  bool operator==(const Key& o) const { return bits == o.bits && bytes == o.bytes; }
};

Key key_from_bits(const BitVec& bits);
Key key_from_bytes(const Bytes& raw, int bits);

// Source of raw random bytes for keygen; tests and the pool plug in here.
using RandomSource = std::function<Bytes(size_t)>;

// Symmetric cipher in a chained mode with an explicit initialization value.
// encrypt_block is the raw single-block core used for the key-validity check
// value Enc_key(iv); encrypt/decrypt handle arbitrary-length byte strings
// with standard byte padding.
class CipherSuite {
 public:
  virtual ~CipherSuite() = default;

  virtual uint8_t id() const = 0;
  virtual std::string name() const = 0;
  virtual int key_bits() const = 0;
  virtual int block_bits() const = 0;

  int key_bytes() const { return (key_bits() + 7) / 8; }
  int block_bytes() const { return (block_bits() + 7) / 8; }
  // iv is a key_bits-wide string, stored in ceil(key_bits/8) bytes
  int iv_bytes() const { return key_bytes(); }

  virtual Bytes encrypt_block(const Key& key, const Bytes& block) const = 0;
  virtual Bytes encrypt(const Key& key, const Bytes& iv, const Bytes& plaintext) const = 0;
  virtual Bytes decrypt(const Key& key, const Bytes& iv, const Bytes& ciphertext) const = 0;

  Key keygen(const RandomSource& rng) const;
  // iv as a single cipher block, zero-extended when key_bits < block_bits
  Bytes iv_as_block(const Bytes& iv) const;
  void check_key(const Key& key) const;
  void check_iv(const Bytes& iv) const;
};

// One-way hash with fixed output width m.
class HashFn {
 public:
  virtual ~HashFn() = default;
  virtual uint8_t id() const = 0;
  virtual std::string name() const = 0;
  virtual int output_bits() const = 0;
  virtual Bytes apply(const Bytes& input) const = 0;
};

// Registered suites:
//   cipher 0x01 aes128 (AES-128, CBC, PKCS#7) — production width
//   cipher 0x02 toy8   (8-bit key, byte blocks) — exhaustive tests
//   cipher 0x03 toy3   (3-bit key, byte blocks) — subsequence toy width
//   hash   0x01 sha256
const CipherSuite& cipher_suite(uint8_t id);
const CipherSuite& cipher_suite_by_name(const std::string& name);
const HashFn& hash_suite(uint8_t id);
const HashFn& hash_suite_by_name(const std::string& name);

}  // namespace aspn

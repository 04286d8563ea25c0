#include "aspn/crypto.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstring>

#include "aspn/error.hpp"

namespace aspn {

Key key_from_bits(const BitVec& bits) {
  Key k;
  k.bits = int(bits.size());
  k.bytes = bits_to_bytes(bits);
  return k;
}

Key key_from_bytes(const Bytes& raw, int bits) {
  size_t need = size_t((bits + 7) / 8);
  if (raw.size() < need) throw ParamError("not enough key material");
  Key k;
  k.bits = bits;
  k.bytes.assign(raw.begin(), raw.begin() + long(need));
  if (bits % 8 != 0) {
    uint8_t mask = uint8_t(0xff << (8 - bits % 8));
    k.bytes.back() &= mask;
  }
  return k;
}

Key CipherSuite::keygen(const RandomSource& rng) const {
  return key_from_bytes(rng(size_t(key_bytes())), key_bits());
}

Bytes CipherSuite::iv_as_block(const Bytes& iv) const {
  check_iv(iv);
  Bytes block(size_t(block_bytes()), 0);
  std::memcpy(block.data(), iv.data(), iv.size());
  return block;
}

void CipherSuite::check_key(const Key& key) const {
  if (key.bits != key_bits() || key.bytes.size() != size_t(key_bytes()))
    throw ParamError(name() + ": key must be " + std::to_string(key_bits()) + " bits");
}

void CipherSuite::check_iv(const Bytes& iv) const {
  if (iv.size() != size_t(iv_bytes()))
    throw ParamError(name() + ": iv must be " + std::to_string(key_bits()) + " bits");
}

namespace {

void evp_check(int rc, const char* what) {
  if (rc != 1) throw Error("crypto", std::string(what) + " failed");
}

struct EvpCtx {
  EVP_CIPHER_CTX* p = EVP_CIPHER_CTX_new();
  ~EvpCtx() { EVP_CIPHER_CTX_free(p); }
};

class Aes128Cbc final : public CipherSuite {
 public:
  uint8_t id() const override { return 0x01; }
  std::string name() const override { return "aes128"; }
  int key_bits() const override { return 128; }
  int block_bits() const override { return 128; }

  Bytes encrypt_block(const Key& key, const Bytes& block) const override {
    check_key(key);
    if (block.size() != 16) throw ParamError("aes128: block must be 16 bytes");
    EvpCtx ctx;
    evp_check(EVP_EncryptInit_ex(ctx.p, EVP_aes_128_ecb(), nullptr, key.bytes.data(), nullptr),
              "EVP_EncryptInit");
    EVP_CIPHER_CTX_set_padding(ctx.p, 0);
    Bytes out(32);
    int n = 0, fin = 0;
    evp_check(EVP_EncryptUpdate(ctx.p, out.data(), &n, block.data(), int(block.size())),
              "EVP_EncryptUpdate");
    evp_check(EVP_EncryptFinal_ex(ctx.p, out.data() + n, &fin), "EVP_EncryptFinal");
    out.resize(size_t(n + fin));
    return out;
  }

  Bytes encrypt(const Key& key, const Bytes& iv, const Bytes& plaintext) const override {
    check_key(key);
    check_iv(iv);
    EvpCtx ctx;
    evp_check(EVP_EncryptInit_ex(ctx.p, EVP_aes_128_cbc(), nullptr, key.bytes.data(), iv.data()),
              "EVP_EncryptInit");
    Bytes out(plaintext.size() + 16);
    int n = 0, fin = 0;
    evp_check(EVP_EncryptUpdate(ctx.p, out.data(), &n, plaintext.data(), int(plaintext.size())),
              "EVP_EncryptUpdate");
    evp_check(EVP_EncryptFinal_ex(ctx.p, out.data() + n, &fin), "EVP_EncryptFinal");
    out.resize(size_t(n + fin));
    return out;
  }

  Bytes decrypt(const Key& key, const Bytes& iv, const Bytes& ciphertext) const override {
    check_key(key);
    check_iv(iv);
    EvpCtx ctx;
    evp_check(EVP_DecryptInit_ex(ctx.p, EVP_aes_128_cbc(), nullptr, key.bytes.data(), iv.data()),
              "EVP_DecryptInit");
    Bytes out(ciphertext.size() + 16);
    int n = 0, fin = 0;
    evp_check(EVP_DecryptUpdate(ctx.p, out.data(), &n, ciphertext.data(), int(ciphertext.size())),
              "EVP_DecryptUpdate");
    if (EVP_DecryptFinal_ex(ctx.p, out.data() + n, &fin) != 1)
      throw CorruptError("aes128: bad padding");
    out.resize(size_t(n + fin));
    return out;
  }
};

// Fixed public byte permutation for the toy ciphers, generated once by
// Fisher-Yates over splitmix64(0x5eed) and frozen here so toy encryptions
// are stable across builds.
std::array<uint8_t, 256> make_sbox() {
  std::array<uint8_t, 256> s{};
  for (int i = 0; i < 256; ++i) s[size_t(i)] = uint8_t(i);
  uint64_t state = 0x5eed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (int i = 255; i >= 1; --i) {
    uint64_t j = next() % uint64_t(i + 1);
    std::swap(s[size_t(i)], s[size_t(j)]);
  }
  return s;
}

const std::array<uint8_t, 256>& sbox() {
  static const std::array<uint8_t, 256> s = make_sbox();
  return s;
}

const std::array<uint8_t, 256>& sbox_inv() {
  static const std::array<uint8_t, 256> inv = [] {
    std::array<uint8_t, 256> r{};
    for (int i = 0; i < 256; ++i) r[sbox()[size_t(i)]] = uint8_t(i);
    return r;
  }();
  return inv;
}

// Reduced-width cipher for exhaustive enumeration: w-bit key, byte blocks,
// E(key, b) = S[b ^ spread(key)]. spread replicates the key across the byte,
// so for any fixed plaintext distinct keys give distinct ciphertexts.
class ToyCipher final : public CipherSuite {
 public:
  ToyCipher(uint8_t id, int width) : id_(id), width_(width) {}

  uint8_t id() const override { return id_; }
  std::string name() const override { return "toy" + std::to_string(width_); }
  int key_bits() const override { return width_; }
  int block_bits() const override { return 8; }

  Bytes encrypt_block(const Key& key, const Bytes& block) const override {
    check_key(key);
    if (block.size() != 1) throw ParamError(name() + ": block must be 1 byte");
    return {sbox()[size_t(block[0] ^ spread(key))]};
  }

  Bytes encrypt(const Key& key, const Bytes& iv, const Bytes& plaintext) const override {
    check_key(key);
    check_iv(iv);
    uint8_t k = spread(key);
    Bytes out;
    out.reserve(plaintext.size() + 1);
    uint8_t chain = iv[0];
    for (uint8_t p : plaintext) {
      chain = sbox()[size_t(uint8_t(p ^ chain) ^ k)];
      out.push_back(chain);
    }
    // one-byte blocks: padding is always a single 0x01 byte
    chain = sbox()[size_t(uint8_t(0x01 ^ chain) ^ k)];
    out.push_back(chain);
    return out;
  }

  Bytes decrypt(const Key& key, const Bytes& iv, const Bytes& ciphertext) const override {
    check_key(key);
    check_iv(iv);
    if (ciphertext.empty()) throw CorruptError(name() + ": empty ciphertext");
    uint8_t k = spread(key);
    Bytes out;
    out.reserve(ciphertext.size());
    uint8_t chain = iv[0];
    for (uint8_t c : ciphertext) {
      out.push_back(uint8_t(uint8_t(sbox_inv()[c] ^ k) ^ chain));
      chain = c;
    }
    if (out.back() != 0x01) throw CorruptError(name() + ": bad padding");
    out.pop_back();
    return out;
  }

 private:
  // key value sits in the top `width_` bits of its byte (MSB-first packing)
  uint8_t spread(const Key& key) const {
    uint8_t v = uint8_t(key.bytes[0] >> (8 - width_));
    unsigned out = 0;
    for (int shift = 0; shift < 8; shift += width_) out |= unsigned(v) << shift;
    return uint8_t(out);
  }

  uint8_t id_;
  int width_;
};

class Sha256 final : public HashFn {
 public:
  uint8_t id() const override { return 0x01; }
  std::string name() const override { return "sha256"; }
  int output_bits() const override { return 256; }

  Bytes apply(const Bytes& input) const override {
    Bytes out(32);
    unsigned int n = 0;
    if (EVP_Digest(input.data(), input.size(), out.data(), &n, EVP_sha256(), nullptr) != 1)
      throw Error("crypto", "EVP_Digest failed");
    out.resize(n);
    return out;
  }
};

}  // namespace

const CipherSuite& cipher_suite(uint8_t id) {
  static const Aes128Cbc aes;
  static const ToyCipher toy8(0x02, 8);
  static const ToyCipher toy3(0x03, 3);
  switch (id) {
    case 0x01: return aes;
    case 0x02: return toy8;
    case 0x03: return toy3;
    default: throw ParamError("unknown cipher suite id " + std::to_string(id));
  }
}

const CipherSuite& cipher_suite_by_name(const std::string& name) {
  for (uint8_t id : {0x01, 0x02, 0x03})
    if (cipher_suite(id).name() == name) return cipher_suite(id);
  throw ParamError("unknown cipher suite '" + name + "'");
}

const HashFn& hash_suite(uint8_t id) {
  static const Sha256 sha;
  if (id == 0x01) return sha;
  throw ParamError("unknown hash suite id " + std::to_string(id));
}

const HashFn& hash_suite_by_name(const std::string& name) {
  if (name == "sha256") return hash_suite(0x01);
  throw ParamError("unknown hash suite '" + name + "'");
}

}  // namespace aspn

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rlce/grs.hpp"

namespace rlce {

/// Scheme parameters. n, k, t describe the underlying code, r is the number
/// of random columns inserted after each generator column, m the field
/// degree. The public code length is n(r+1).
struct Params {
  std::uint16_t n = 0;
  std::uint16_t k = 0;
  std::uint16_t t = 0;
  std::uint8_t r = 0;
  std::uint8_t m = 0;
  std::uint16_t security_bits = 0;  // 0 for custom parameter sets

  std::size_t block_width() const { return std::size_t{r} + 1; }
  std::size_t public_length() const { return std::size_t{n} * block_width(); }

  /// Throws InvalidParameters unless every scheme constraint holds:
  /// n - k >= 2t, t >= 1, 1 <= r < k - 1, n <= 2^m, 4 <= m <= 12, and
  /// t > 2 * max(0, (n - k^2) / 2k).
  void validate() const;

  bool operator==(const Params&) const = default;
};

/// Registry of recommended parameter sets per nominal security level
/// (60, 80, 128, 192, 256). Field degrees are the smallest that admit an
/// [n, k] MDS code, i.e. 2^m >= n. Throws UnknownLevel.
Params recommended_params(int security_bits);

/// Size of the serialized generator in bits: k(n(r+1)-k)m when systematic,
/// k*n(r+1)*m for the full matrix. Pure arithmetic; the tuple need not be
/// constructible.
std::uint64_t public_key_size_bits(const Params& params, bool systematic);

struct PublicKey {
  Params params;
  Matrix G;  // k x n(r+1), always full-form in memory
  bool systematic = false;

  /// Row-reduces G to [I | G']; throws SingularMatrix when the leading k
  /// columns are dependent. Row space (the code) is unchanged.
  PublicKey to_systematic() const;
};

struct PrivateKey {
  Params params;
  Matrix S_inv;
  GrsCode code;
  std::vector<Matrix> A_inv;  // n blocks of size (r+1) x (r+1)
  Permutation P_inv;
  std::array<std::uint8_t, 32> public_hash;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct Ciphertext {
  Params params;
  Row y;  // length n(r+1)
};

KeyPair keygen(const Params& params, RandomSource& rng,
               bool systematic = false);

/// y = mG + e with weight(e) exactly t.
Ciphertext encrypt(const PublicKey& pk, std::span<const GfElem> message,
                   RandomSource& rng);

/// Unmixes, decodes and re-checks weight(y - mG) <= t. Returns nullopt when
/// decoding or the weight check fails; the two failure causes share one
/// error path. The public key must be the one bound into the private key's
/// digest; otherwise KeyMismatch is thrown.
std::optional<Row> decrypt(const PrivateKey& sk, const PublicKey& pk,
                           const Ciphertext& ct);

}  // namespace rlce

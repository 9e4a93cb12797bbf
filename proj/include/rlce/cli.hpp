#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rlce/analysis.hpp"
#include "rlce/scheme.hpp"

namespace rlce::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitFormat = 4;
inline constexpr int kExitCrypto = 5;

/// Largest message (in bytes) one ciphertext carries: m*k bits minus the
/// two-byte length prefix.
std::size_t max_message_bytes(const Params& params);

/// Packs bytes into k field elements: a 2-byte big-endian length prefix
/// followed by the payload, consumed as a big-endian bitstream m bits at a
/// time and zero-padded. Throws InvalidParameters when the payload exceeds
/// max_message_bytes.
std::vector<GfElem> pack_message(std::span<const std::uint8_t> bytes,
                                 const Params& params);

/// Inverse of pack_message; nullopt when the embedded length is impossible.
std::optional<std::vector<std::uint8_t>> unpack_message(
    std::span<const GfElem> elements, const Params& params);

struct KeygenOptions {
  std::optional<int> level;
  std::optional<Params> explicit_params;
  std::string pub_path;
  std::string priv_path;
  std::optional<std::uint64_t> seed;
  bool systematic = false;
};
int cmd_keygen(const KeygenOptions& opt);

struct EncryptOptions {
  std::string pub_path;
  std::string input_path;  // "-" reads stdin
  std::string output_path;
  std::optional<std::uint64_t> seed;
};
int cmd_encrypt(const EncryptOptions& opt);

struct DecryptOptions {
  std::string priv_path;
  std::string pub_path;  // needed for the ciphertext weight re-check
  std::string input_path;
  std::string output_path;
};
int cmd_decrypt(const DecryptOptions& opt);

struct ParamsOptions {
  std::optional<int> level;
  std::optional<Params> explicit_params;
};
int cmd_params(const ParamsOptions& opt);

struct AnalyzeOptions {
  std::string mode;  // square | distinguish | isd | equiv
  std::string output_path;  // empty writes stdout

  // square
  std::string pub_path;  // square a stored public key ...
  std::optional<std::uint16_t> grs_n, grs_k;  // ... or a fresh GRS generator

  // distinguish / equiv scale
  std::optional<Params> explicit_params;
  std::size_t trials = 10;
  std::size_t puncture_limit = 0;
  bool full_scale = false;

  // isd
  std::optional<std::uint16_t> isd_n, isd_k, isd_t;
  std::optional<std::uint64_t> isd_q;
  std::string isd_algorithm = "both";  // prange | lee-brickell | both

  // equiv
  std::optional<std::uint16_t> equiv_k, equiv_n;

  std::optional<std::uint8_t> field_degree;
  std::optional<std::uint64_t> seed;
};
int cmd_analyze(const AnalyzeOptions& opt);

}  // namespace rlce::cli

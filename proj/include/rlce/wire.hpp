#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rlce/scheme.hpp"

namespace rlce {

/// File layout shared by keys and ciphertexts:
///   "RLCE" | version 0x01 | m (1B) | r (1B) | n (2B BE) | k (2B BE) |
///   t (2B BE) | flags (1B) | payload
/// flags bit0 = systematic public key, bit1 = private key, bit2 = ciphertext.
/// Field elements are big-endian in ceil(m/8) bytes; permutation indices are
/// 2-byte big-endian.
///
/// Public payload: generator entries row-major (only the non-identity block
/// when systematic). Private payload: S^{-1} (k^2 entries), alpha (n), v (n),
/// A^{-1} blocks (n*(r+1)^2, block-major), P^{-1} (n(r+1) indices), then a
/// 32-byte digest of the serialized public key. Ciphertext payload: n(r+1)
/// entries.

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);

std::vector<std::uint8_t> serialize_public_key(const PublicKey& pk);
std::vector<std::uint8_t> serialize_private_key(const PrivateKey& sk);
std::vector<std::uint8_t> serialize_ciphertext(const Ciphertext& ct);

PublicKey parse_public_key(std::span<const std::uint8_t> bytes);
PrivateKey parse_private_key(std::span<const std::uint8_t> bytes);
Ciphertext parse_ciphertext(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

void write_public_key(const std::string& path, const PublicKey& pk);
void write_private_key(const std::string& path, const PrivateKey& sk);
void write_ciphertext(const std::string& path, const Ciphertext& ct);
PublicKey read_public_key(const std::string& path);
PrivateKey read_private_key(const std::string& path);
Ciphertext read_ciphertext(const std::string& path);

}  // namespace rlce

#include "rlce/wire.hpp"

#include <doctest.h>

#include "rlce/errors.hpp"

using namespace rlce;

namespace {

KeyPair desk_pair(std::uint64_t seed, bool systematic = false) {
  SeededRng rng(seed);
  return keygen(Params{40, 20, 10, 1, 8, 0}, rng, systematic);
}

}  // namespace

TEST_CASE("key and ciphertext serialization is a bit-exact roundtrip") {
  KeyPair pair = desk_pair(31);
  const auto pub_bytes = serialize_public_key(pair.pub);
  const auto priv_bytes = serialize_private_key(pair.priv);
  CHECK(serialize_public_key(parse_public_key(pub_bytes)) == pub_bytes);
  CHECK(serialize_private_key(parse_private_key(priv_bytes)) == priv_bytes);

  SeededRng rng(32);
  Ciphertext ct = encrypt(pair.pub, Row(20, 3), rng);
  const auto ct_bytes = serialize_ciphertext(ct);
  CHECK(serialize_ciphertext(parse_ciphertext(ct_bytes)) == ct_bytes);

  // parsed keys stay functional end to end
  PublicKey pk = parse_public_key(pub_bytes);
  PrivateKey sk = parse_private_key(priv_bytes);
  auto out = decrypt(sk, pk, parse_ciphertext(ct_bytes));
  REQUIRE(out.has_value());
  CHECK(*out == Row(20, 3));
}

TEST_CASE("systematic public keys store only the non-identity block") {
  KeyPair full = desk_pair(33);
  KeyPair sys = desk_pair(33, true);
  const auto full_bytes = serialize_public_key(full.pub);
  const auto sys_bytes = serialize_public_key(sys.pub);
  const Params p = full.pub.params;
  CHECK(full_bytes.size() == 14 + std::size_t{p.k} * p.public_length());
  CHECK(sys_bytes.size() == 14 + std::size_t{p.k} * (p.public_length() - p.k));
  CHECK(serialize_public_key(parse_public_key(sys_bytes)) == sys_bytes);
}

TEST_CASE("wide fields use two-byte big-endian elements") {
  SeededRng rng(34);
  KeyPair pair = keygen(Params{48, 20, 10, 1, 10, 0}, rng);
  const auto bytes = serialize_public_key(pair.pub);
  const Params p = pair.pub.params;
  CHECK(bytes.size() == 14 + 2 * std::size_t{p.k} * p.public_length());
  CHECK(bytes[4] == 0x01);  // version
  CHECK(bytes[5] == 10);    // m
  // n = 48 big-endian at offset 7
  CHECK(bytes[7] == 0);
  CHECK(bytes[8] == 48);
  PublicKey back = parse_public_key(bytes);
  CHECK(back.G == pair.pub.G);
}

TEST_CASE("malformed inputs raise FormatError") {
  KeyPair pair = desk_pair(35);
  auto bytes = serialize_public_key(pair.pub);

  auto truncated = bytes;
  truncated.resize(truncated.size() - 1);
  CHECK_THROWS_AS(parse_public_key(truncated), FormatError);

  auto trailing = bytes;
  trailing.push_back(0);
  CHECK_THROWS_AS(parse_public_key(trailing), FormatError);

  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(parse_public_key(bad_magic), FormatError);

  auto bad_version = bytes;
  bad_version[4] = 0x02;
  CHECK_THROWS_AS(parse_public_key(bad_version), FormatError);

  // t = 60 makes 2t exceed n - k in the header
  auto bad_params = bytes;
  bad_params[11] = 0;
  bad_params[12] = 60;
  CHECK_THROWS_AS(parse_public_key(bad_params), FormatError);

  CHECK_THROWS_AS(parse_private_key(bytes), FormatError);
  CHECK_THROWS_AS(parse_ciphertext(bytes), FormatError);
}

TEST_CASE("private key digest binds the public key bytes") {
  KeyPair pair = desk_pair(36);
  CHECK(pair.priv.public_hash == sha256(serialize_public_key(pair.pub)));
  KeyPair other = desk_pair(37);
  CHECK(pair.priv.public_hash != sha256(serialize_public_key(other.pub)));
}

TEST_CASE("file helpers write and read back") {
  KeyPair pair = desk_pair(38);
  const std::string path = "/tmp/rlce_wire_test.pub";
  write_public_key(path, pair.pub);
  PublicKey back = read_public_key(path);
  CHECK(back.G == pair.pub.G);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_public_key("/nonexistent/dir/key.pub"), IoError);
}

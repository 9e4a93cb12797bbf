#include "rlce/wire.hpp"

#include <openssl/sha.h>

#include <cstdio>
#include <memory>

#include "rlce/errors.hpp"

namespace rlce {

namespace {

constexpr char kMagic[4] = {'R', 'L', 'C', 'E'};
constexpr std::uint8_t kVersion = 0x01;
constexpr std::uint8_t kFlagSystematic = 0x01;
constexpr std::uint8_t kFlagPrivate = 0x02;
constexpr std::uint8_t kFlagCiphertext = 0x04;
constexpr std::size_t kHeaderSize = 14;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }

  std::uint16_t u16() {
    need(2);
    const std::uint16_t v =
        static_cast<std::uint16_t>(bytes_[pos_] << 8) | bytes_[pos_ + 1];
    pos_ += 2;
    return v;
  }

  void raw(std::span<std::uint8_t> out) {
    need(out.size());
    std::copy_n(bytes_.data() + pos_, out.size(), out.data());
    pos_ += out.size();
  }

  bool exhausted() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t count) {
    if (pos_ + count > bytes_.size()) {
      throw FormatError("file truncated: expected " + std::to_string(count) +
                        " more bytes at offset " + std::to_string(pos_));
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void put_elements(std::vector<std::uint8_t>& out, const Params& p,
                  std::span<const GfElem> elems) {
  if (p.m <= 8) {
    for (GfElem e : elems) out.push_back(static_cast<std::uint8_t>(e));
  } else {
    for (GfElem e : elems) put_u16(out, e);
  }
}

Row get_elements(Reader& r, const Params& p, std::size_t count) {
  const std::uint32_t q = 1u << p.m;
  Row elems(count);
  for (std::size_t i = 0; i < count; ++i) {
    const GfElem e = p.m <= 8 ? GfElem{r.u8()} : GfElem{r.u16()};
    if (e >= q) throw FormatError("field element out of range");
    elems[i] = e;
  }
  return elems;
}

std::vector<std::uint8_t> make_header(const Params& p, std::uint8_t flags) {
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(p.m);
  out.push_back(p.r);
  put_u16(out, p.n);
  put_u16(out, p.k);
  put_u16(out, p.t);
  out.push_back(flags);
  return out;
}

Params parse_header(Reader& r, std::uint8_t& flags_out) {
  std::array<std::uint8_t, 4> magic{};
  r.raw(magic);
  if (!std::equal(magic.begin(), magic.end(), kMagic)) {
    throw FormatError("bad magic bytes");
  }
  if (r.u8() != kVersion) throw FormatError("unsupported format version");
  Params p;
  p.m = r.u8();
  p.r = r.u8();
  p.n = r.u16();
  p.k = r.u16();
  p.t = r.u16();
  flags_out = r.u8();
  try {
    p.validate();
  } catch (const InvalidParameters& e) {
    throw FormatError(std::string("invalid parameter header: ") + e.what());
  }
  return p;
}

}  // namespace

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> digest{};
  SHA256(data.data(), data.size(), digest.data());
  return digest;
}

std::vector<std::uint8_t> serialize_public_key(const PublicKey& pk) {
  const Params& p = pk.params;
  std::vector<std::uint8_t> out =
      make_header(p, pk.systematic ? kFlagSystematic : 0);
  if (pk.systematic) {
    const std::size_t big_n = p.public_length();
    for (std::size_t r = 0; r < p.k; ++r) {
      put_elements(out, p, pk.G.row(r).subspan(p.k, big_n - p.k));
    }
  } else {
    put_elements(out, p, pk.G.data());
  }
  return out;
}

std::vector<std::uint8_t> serialize_private_key(const PrivateKey& sk) {
  const Params& p = sk.params;
  std::vector<std::uint8_t> out = make_header(p, kFlagPrivate);
  put_elements(out, p, sk.S_inv.data());
  put_elements(out, p, sk.code.alpha());
  put_elements(out, p, sk.code.multipliers());
  for (const Matrix& block : sk.A_inv) put_elements(out, p, block.data());
  for (std::uint32_t idx : sk.P_inv.map()) {
    put_u16(out, static_cast<std::uint16_t>(idx));
  }
  out.insert(out.end(), sk.public_hash.begin(), sk.public_hash.end());
  return out;
}

std::vector<std::uint8_t> serialize_ciphertext(const Ciphertext& ct) {
  std::vector<std::uint8_t> out = make_header(ct.params, kFlagCiphertext);
  put_elements(out, ct.params, ct.y);
  return out;
}

PublicKey parse_public_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  std::uint8_t flags = 0;
  Params p = parse_header(r, flags);
  if (flags & (kFlagPrivate | kFlagCiphertext)) {
    throw FormatError("not a public key file");
  }
  const bool systematic = flags & kFlagSystematic;
  FieldPtr field = make_field(p.m);
  const std::size_t big_n = p.public_length();
  Matrix g(field, p.k, big_n);
  if (systematic) {
    for (std::size_t row = 0; row < p.k; ++row) {
      g.at(row, row) = 1;
      Row tail = get_elements(r, p, big_n - p.k);
      for (std::size_t c = 0; c < tail.size(); ++c) {
        g.at(row, p.k + c) = tail[c];
      }
    }
  } else {
    g.data() = get_elements(r, p, std::size_t{p.k} * big_n);
  }
  if (!r.exhausted()) throw FormatError("trailing bytes after public key");
  return PublicKey{p, std::move(g), systematic};
}

PrivateKey parse_private_key(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  std::uint8_t flags = 0;
  Params p = parse_header(r, flags);
  if (!(flags & kFlagPrivate) || (flags & kFlagCiphertext)) {
    throw FormatError("not a private key file");
  }
  FieldPtr field = make_field(p.m);
  const std::size_t w = p.block_width();
  const std::size_t big_n = p.public_length();

  Matrix s_inv(field, p.k, p.k);
  s_inv.data() = get_elements(r, p, std::size_t{p.k} * p.k);

  Row alpha = get_elements(r, p, p.n);
  Row mult = get_elements(r, p, p.n);

  std::vector<Matrix> a_inv;
  a_inv.reserve(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    Matrix block(field, w, w);
    block.data() = get_elements(r, p, w * w);
    a_inv.push_back(std::move(block));
  }

  std::vector<std::uint32_t> perm_map(big_n);
  for (std::size_t i = 0; i < big_n; ++i) perm_map[i] = r.u16();

  std::array<std::uint8_t, 32> digest{};
  r.raw(digest);
  if (!r.exhausted()) throw FormatError("trailing bytes after private key");

  try {
    GrsCode code(field, std::move(alpha), std::move(mult), p.k);
    Permutation p_inv(std::move(perm_map));
    return PrivateKey{p,      std::move(s_inv), std::move(code),
                      std::move(a_inv), std::move(p_inv), digest};
  } catch (const InvalidParameters& e) {
    throw FormatError(std::string("inconsistent private key contents: ") +
                      e.what());
  }
}

Ciphertext parse_ciphertext(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  std::uint8_t flags = 0;
  Params p = parse_header(r, flags);
  if (!(flags & kFlagCiphertext)) throw FormatError("not a ciphertext file");
  Row y = get_elements(r, p, p.public_length());
  if (!r.exhausted()) throw FormatError("trailing bytes after ciphertext");
  return Ciphertext{p, std::move(y)};
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(
      std::fopen(path.c_str(), "rb"), &std::fclose);
  if (!f) throw IoError("cannot open " + path + " for reading");
  std::vector<std::uint8_t> bytes;
  std::uint8_t buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), f.get())) > 0) {
    bytes.insert(bytes.end(), buf, buf + got);
  }
  if (std::ferror(f.get())) throw IoError("read failure on " + path);
  return bytes;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> f(
      std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!f) throw IoError("cannot open " + path + " for writing");
  if (std::fwrite(bytes.data(), 1, bytes.size(), f.get()) != bytes.size()) {
    throw IoError("write failure on " + path);
  }
}

void write_public_key(const std::string& path, const PublicKey& pk) {
  write_file(path, serialize_public_key(pk));
}

void write_private_key(const std::string& path, const PrivateKey& sk) {
  write_file(path, serialize_private_key(sk));
}

void write_ciphertext(const std::string& path, const Ciphertext& ct) {
  write_file(path, serialize_ciphertext(ct));
}

PublicKey read_public_key(const std::string& path) {
  return parse_public_key(read_file(path));
}

PrivateKey read_private_key(const std::string& path) {
  return parse_private_key(read_file(path));
}

Ciphertext read_ciphertext(const std::string& path) {
  return parse_ciphertext(read_file(path));
}

}  // namespace rlce

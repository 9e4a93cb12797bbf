#include "rlce/scheme.hpp"

#include <string>
#include <utility>

#include "rlce/errors.hpp"
#include "rlce/wire.hpp"

namespace rlce {

void Params::validate() const {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw InvalidParameters("field degree m must lie in [4, 12]");
  }
  if (n == 0 || k == 0 || k > n) {
    throw InvalidParameters("dimensions must satisfy 1 <= k <= n");
  }
  if (std::uint32_t{n} > (1u << m)) {
    throw InvalidParameters("code length exceeds field size: n <= 2^m required");
  }
  if (t == 0 || 2 * std::uint32_t{t} > std::uint32_t(n - k)) {
    throw InvalidParameters("error weight must satisfy 1 <= t and n-k >= 2t");
  }
  if (r < 1 || std::uint32_t{r} >= std::uint32_t{k} - 1) {
    throw InvalidParameters("insertion count must satisfy 1 <= r < k-1");
  }
  // Guard against the block-equivalence decoding shortcut: t must clear twice
  // the (n - k^2) / 2k threshold whenever that bound is positive.
  const double shortcut = (double(n) - double(k) * double(k)) / (2.0 * k);
  if (shortcut > 0 && double(t) <= 2.0 * shortcut) {
    throw InvalidParameters("error weight too small relative to (n-k^2)/2k");
  }
}

Params recommended_params(int security_bits) {
  // n, k, t match the published recommendation table; m is the smallest
  // degree with 2^m >= n so that n distinct evaluation points exist (the
  // nominal table pairs these lengths with fields smaller than n, which no
  // MDS code can satisfy).
  switch (security_bits) {
    case 60:
      return Params{360, 200, 80, 1, 9, 60};
    case 80:
      return Params{560, 380, 90, 1, 10, 80};
    case 128:
      return Params{1020, 660, 180, 1, 10, 128};
    case 192:
      return Params{1560, 954, 203, 1, 11, 192};
    case 256:
      return Params{2184, 1260, 412, 1, 12, 256};
    default:
      throw UnknownLevel("no recommended parameters for security level " +
                         std::to_string(security_bits));
  }
}

std::uint64_t public_key_size_bits(const Params& p, bool systematic) {
  const std::uint64_t cols = std::uint64_t{p.n} * (std::uint64_t{p.r} + 1);
  const std::uint64_t entries =
      systematic ? std::uint64_t{p.k} * (cols - p.k) : std::uint64_t{p.k} * cols;
  return entries * p.m;
}

PublicKey PublicKey::to_systematic() const {
  RrefResult reduced = G.rref();
  if (reduced.pivots.size() != params.k) {
    throw SingularMatrix("generator matrix is rank-deficient");
  }
  for (std::size_t i = 0; i < reduced.pivots.size(); ++i) {
    if (reduced.pivots[i] != i) {
      throw SingularMatrix("leading k columns of the generator are singular");
    }
  }
  return PublicKey{params, std::move(reduced.matrix), true};
}

namespace {

// Rebuilds the public matrix from the stored inverse-form secrets plus the
// generation-local column blocks, and compares with the published G. Catches
// any bad inverse before the key ever leaves keygen.
void verify_keypair(const PublicKey& pub, const PrivateKey& priv,
                    const std::vector<Matrix>& c_blocks) {
  const Params& p = pub.params;
  const std::size_t w = p.block_width();
  const FieldPtr& field = priv.code.field();
  Matrix gs = priv.code.generator_matrix();
  Matrix mixed(field, p.k, p.public_length());
  const Matrix s = priv.S_inv.inverse();
  for (std::size_t i = 0; i < p.n; ++i) {
    Matrix block(field, p.k, w);
    block.set_column(0, gs.column(i));
    block.set_columns(1, c_blocks[i]);
    mixed.set_columns(i * w, block * priv.A_inv[i].inverse());
  }
  const Matrix rebuilt = priv.P_inv.inverse().permute_columns(s * mixed);
  if (!(rebuilt == pub.G)) {
    throw Error("key generation self-check failed");
  }
}

}  // namespace

KeyPair keygen(const Params& params, RandomSource& rng, bool systematic) {
  params.validate();
  FieldPtr field = make_field(params.m);
  const std::size_t n = params.n;
  const std::size_t k = params.k;
  const std::size_t w = params.block_width();
  const std::size_t big_n = params.public_length();

  GrsCode code = GrsCode::random(field, n, k, rng);
  Matrix gs = code.generator_matrix();

  std::vector<Matrix> c_blocks;
  c_blocks.reserve(n);
  std::vector<Matrix> a_blocks(n), a_inv(n);
  Matrix mixed(field, k, big_n);
  for (std::size_t i = 0; i < n; ++i) {
    c_blocks.push_back(Matrix::random(field, k, params.r, rng));
    Matrix block(field, k, w);
    block.set_column(0, gs.column(i));
    block.set_columns(1, c_blocks[i]);
    auto [a, ai] = Matrix::random_nonsingular_with_inverse(field, w, rng);
    a_blocks[i] = std::move(a);
    a_inv[i] = std::move(ai);
    mixed.set_columns(i * w, block * a_blocks[i]);
  }

  Matrix scrambled_perm;
  Matrix s_inv;
  Permutation perm = Permutation::identity(big_n);
  if (systematic) {
    // [I | G'] is the row-reduced form of any scrambled key, so the scramble
    // collapses to inverting the leading k columns of the permuted matrix.
    constexpr int kMaxTries = 1000;
    int tries = 0;
    for (;;) {
      perm = Permutation::random(big_n, rng);
      Matrix permuted = perm.permute_columns(mixed);
      Matrix leading = permuted.columns(0, k);
      if (auto s = leading.try_inverse()) {
        s_inv = std::move(leading);
        scrambled_perm = *s * permuted;
        break;
      }
      if (++tries >= kMaxTries) {
        throw Error("failed to reach systematic form");
      }
    }
  } else {
    auto [s, si] = Matrix::random_nonsingular_with_inverse(field, k, rng);
    perm = Permutation::random(big_n, rng);
    s_inv = std::move(si);
    scrambled_perm = perm.permute_columns(s * mixed);
  }

  PublicKey pub{params, std::move(scrambled_perm), systematic};
  PrivateKey priv{params,
                  std::move(s_inv),
                  std::move(code),
                  std::move(a_inv),
                  perm.inverse(),
                  sha256(serialize_public_key(pub))};
  verify_keypair(pub, priv, c_blocks);
  return KeyPair{std::move(pub), std::move(priv)};
}

Ciphertext encrypt(const PublicKey& pk, std::span<const GfElem> message,
                   RandomSource& rng) {
  const Params& p = pk.params;
  if (message.size() != p.k) {
    throw DimensionMismatch("message must hold exactly k field elements");
  }
  const std::uint32_t q = 1u << p.m;
  for (GfElem e : message) {
    if (e >= q) throw InvalidParameters("message element outside the field");
  }
  Row y = pk.G.left_mul(message);

  // weight-exactly-t error: t distinct positions, uniform nonzero values
  const std::size_t big_n = p.public_length();
  std::vector<std::uint32_t> idx(big_n);
  for (std::size_t i = 0; i < big_n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < p.t; ++i) {
    const std::size_t j =
        i + rng.below(static_cast<std::uint32_t>(big_n - i));
    std::swap(idx[i], idx[j]);
    y[idx[i]] = Field::add(y[idx[i]],
                           static_cast<GfElem>(1 + rng.below(q - 1)));
  }
  return Ciphertext{p, std::move(y)};
}

std::optional<Row> decrypt(const PrivateKey& sk, const PublicKey& pk,
                           const Ciphertext& ct) {
  const Params& p = sk.params;
  if (!(pk.params == p) || !(ct.params == p)) {
    throw KeyMismatch("parameter headers disagree across key and ciphertext");
  }
  if (ct.y.size() != p.public_length()) {
    throw DimensionMismatch("ciphertext length must be n(r+1)");
  }
  if (sha256(serialize_public_key(pk)) != sk.public_hash) {
    throw KeyMismatch("public key does not match the private key digest");
  }

  const Field& f = *sk.code.field();
  const std::size_t w = p.block_width();

  Row unpermuted = sk.P_inv.apply(ct.y);
  Row projected(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    // first component of block_i * A_i^{-1}
    const Matrix& ai = sk.A_inv[i];
    GfElem acc = 0;
    for (std::size_t l = 0; l < w; ++l) {
      acc = Field::add(acc, f.mul(unpermuted[i * w + l], ai.at(l, 0)));
    }
    projected[i] = acc;
  }

  auto decoded = sk.code.decode(projected, p.t);
  if (!decoded) return std::nullopt;
  Row message = sk.S_inv.left_mul(decoded->message);

  Row codeword = pk.G.left_mul(message);
  std::size_t weight = 0;
  for (std::size_t j = 0; j < codeword.size(); ++j) {
    if (Field::add(codeword[j], ct.y[j]) != 0) ++weight;
  }
  if (weight > p.t) return std::nullopt;
  return message;
}

}  // namespace rlce

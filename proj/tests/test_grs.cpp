#include "rlce/grs.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "rlce/errors.hpp"

using namespace rlce;

namespace {

// Enumerates every codeword; the reference for distance and decoding checks.
struct CodewordTable {
  explicit CodewordTable(const GrsCode& code) {
    const std::size_t k = code.dimension();
    const std::uint32_t q = code.field()->order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;
    messages.reserve(total);
    words.reserve(total);
    Row msg(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rem = idx;
      for (std::size_t i = 0; i < k; ++i) {
        msg[i] = static_cast<GfElem>(rem % q);
        rem /= q;
      }
      messages.push_back(msg);
      words.push_back(code.encode(msg));
    }
  }

  std::size_t distance(std::span<const GfElem> a,
                       std::span<const GfElem> b) const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) ++d;
    }
    return d;
  }

  // index of the unique nearest codeword, breaking ties by first hit
  std::size_t nearest(std::span<const GfElem> word) const {
    std::size_t best = 0, best_d = SIZE_MAX;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const std::size_t d = distance(words[i], word);
      if (d < best_d) {
        best = i;
        best_d = d;
      }
    }
    return best;
  }

  std::size_t min_weight() const {
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 1; i < words.size(); ++i) {
      best = std::min(best, hamming_weight(words[i]));
    }
    return best;
  }

  std::vector<Row> messages;
  std::vector<Row> words;
};

GrsCode small_code(const FieldPtr& f, std::size_t n, std::size_t k,
                   std::uint64_t seed) {
  SeededRng rng(seed);
  return GrsCode::random(f, n, k, rng);
}

}  // namespace

TEST_CASE("construction validates lengths, multipliers and distinctness") {
  auto f = make_field(4);
  SeededRng rng(1);
  CHECK_THROWS_AS(GrsCode::random(f, 17, 4, rng), InvalidParameters);  // n = q+1
  CHECK_THROWS_AS(GrsCode::random(f, 8, 9, rng), InvalidParameters);
  CHECK_THROWS_AS(GrsCode(f, {1, 1, 2}, {1, 1, 1}, 2), InvalidParameters);
  CHECK_THROWS_AS(GrsCode(f, {1, 3, 2}, {1, 0, 1}, 2), InvalidParameters);
}

TEST_CASE("generator matrix rows follow the evaluation-point powers") {
  auto f = make_field(8);
  GrsCode code = small_code(f, 12, 5, 2);
  Matrix g = code.generator_matrix();
  for (std::size_t j = 0; j < 12; ++j) {
    CHECK(g.at(0, j) == code.multipliers()[j]);
    CHECK(g.at(1, j) == f->mul(code.multipliers()[j], code.alpha()[j]));
  }
  CHECK(g.rank() == 5);

  GrsCode ones(f, {0, 1, 2, 3, 4, 5}, {1, 1, 1, 1, 1, 1}, 3);
  Matrix g1 = ones.generator_matrix();
  for (std::size_t j = 0; j < 6; ++j) CHECK(g1.at(1, j) == ones.alpha()[j]);
}

TEST_CASE("encode matches the generator matrix product") {
  auto f = make_field(8);
  GrsCode code = small_code(f, 20, 8, 3);
  CHECK(hamming_weight(code.encode(Row(8, 0))) == 0);

  Row unit(8, 0);
  unit[0] = 1;
  CHECK(code.encode(unit) == code.multipliers());

  SeededRng rng(4);
  Matrix g = code.generator_matrix();
  for (int i = 0; i < 20; ++i) {
    Row msg(8);
    for (auto& e : msg) e = static_cast<GfElem>(rng.below(256));
    CHECK(code.encode(msg) == g.left_mul(msg));
  }
  CHECK_THROWS_AS(code.encode(Row(7, 0)), DimensionMismatch);
}

TEST_CASE("minimum distance is n-k+1, exhaustively on small instances") {
  auto f16 = make_field(4);
  CHECK(CodewordTable(small_code(f16, 8, 4, 5)).min_weight() == 5);
  CHECK(CodewordTable(small_code(f16, 10, 5, 6)).min_weight() == 6);
  CHECK(CodewordTable(small_code(f16, 6, 3, 7)).min_weight() == 4);
}

TEST_CASE("decoding roundtrips across parameter and field choices") {
  SeededRng rng(8);
  for (int m : {4, 6, 8, 10}) {
    auto f = make_field(m);
    const std::uint32_t q = f->order();
    const std::size_t n = std::min<std::size_t>(q, 40);
    const std::size_t k = n / 2;
    GrsCode code = GrsCode::random(f, n, k, rng);
    const std::size_t t = code.capacity();
    for (int trial = 0; trial < 50; ++trial) {
      Row msg(k);
      for (auto& e : msg) e = static_cast<GfElem>(rng.below(q));
      Row word = code.encode(msg);
      const std::size_t weight = rng.below(static_cast<std::uint32_t>(t + 1));
      std::vector<std::uint32_t> idx(n);
      std::iota(idx.begin(), idx.end(), 0u);
      Row err(n, 0);
      for (std::size_t i = 0; i < weight; ++i) {
        const std::size_t j = i + rng.below(static_cast<std::uint32_t>(n - i));
        std::swap(idx[i], idx[j]);
        err[idx[i]] = static_cast<GfElem>(1 + rng.below(q - 1));
        word[idx[i]] = Field::add(word[idx[i]], err[idx[i]]);
      }
      auto dec = code.decode(word, t);
      REQUIRE(dec.has_value());
      REQUIRE(dec->message == msg);
      REQUIRE(dec->error == err);
    }
  }
}

TEST_CASE("errors on a zero evaluation point are corrected") {
  auto f = make_field(8);
  SeededRng rng(9);
  // pin alpha = 0 into the support
  std::vector<GfElem> alpha{0};
  for (GfElem a = 1; alpha.size() < 16; ++a) alpha.push_back(a);
  std::vector<GfElem> v(16);
  for (auto& e : v) e = static_cast<GfElem>(1 + rng.below(255));
  GrsCode code(f, alpha, v, 6);
  const std::size_t t = code.capacity();

  for (int trial = 0; trial < 200; ++trial) {
    Row msg(6);
    for (auto& e : msg) e = static_cast<GfElem>(rng.below(256));
    Row word = code.encode(msg);
    Row err(16, 0);
    // always corrupt position 0 (the zero point), plus t-1 others
    err[0] = static_cast<GfElem>(1 + rng.below(255));
    for (std::size_t i = 1; i < t; ++i) {
      err[1 + rng.below(14)] = static_cast<GfElem>(1 + rng.below(255));
    }
    Row received(16);
    for (std::size_t i = 0; i < 16; ++i) {
      received[i] = Field::add(word[i], err[i]);
    }
    auto dec = code.decode(received, t);
    REQUIRE(dec.has_value());
    REQUIRE(dec->message == msg);
  }
}

TEST_CASE("full-support code (n = q) decodes through the zero point") {
  auto f = make_field(4);
  SeededRng rng(10);
  GrsCode code = GrsCode::random(f, 16, 6, rng);  // support is all of GF(16)
  const std::size_t t = code.capacity();
  REQUIRE(t == 5);
  for (int trial = 0; trial < 200; ++trial) {
    Row msg(6);
    for (auto& e : msg) e = static_cast<GfElem>(rng.below(16));
    Row word = code.encode(msg);
    const std::size_t weight = rng.below(static_cast<std::uint32_t>(t + 1));
    std::vector<std::uint32_t> idx(16);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t i = 0; i < weight; ++i) {
      const std::size_t j = i + rng.below(static_cast<std::uint32_t>(16 - i));
      std::swap(idx[i], idx[j]);
      word[idx[i]] = Field::add(word[idx[i]],
                                static_cast<GfElem>(1 + rng.below(15)));
    }
    auto dec = code.decode(word, t);
    REQUIRE(dec.has_value());
    REQUIRE(dec->message == msg);
  }
}

TEST_CASE("zero-syndrome path returns the message with an empty error") {
  auto f = make_field(8);
  GrsCode code = small_code(f, 24, 10, 11);
  SeededRng rng(12);
  Row msg(10);
  for (auto& e : msg) e = static_cast<GfElem>(rng.below(256));
  auto dec = code.decode(code.encode(msg), code.capacity());
  REQUIRE(dec.has_value());
  CHECK(dec->message == msg);
  CHECK(hamming_weight(dec->error) == 0);
}

TEST_CASE("degenerate n = k code verifies words without correcting") {
  auto f = make_field(6);
  GrsCode code = small_code(f, 9, 9, 13);
  SeededRng rng(14);
  Row msg(9);
  for (auto& e : msg) e = static_cast<GfElem>(rng.below(64));
  auto dec = code.decode(code.encode(msg), 0);
  REQUIRE(dec.has_value());
  CHECK(dec->message == msg);
}

TEST_CASE("exhaustive double-error sweep matches the nearest-codeword oracle") {
  auto f = make_field(4);
  GrsCode code = small_code(f, 8, 4, 15);
  CodewordTable table(code);
  REQUIRE(table.min_weight() == 5);

  SeededRng rng(16);
  // all weight <= 2 patterns against a sample of messages; the acceptance
  // suite runs the full message space
  std::vector<Row> errors;
  errors.push_back(Row(8, 0));
  for (int p = 0; p < 8; ++p) {
    for (GfElem val = 1; val < 16; ++val) {
      Row e(8, 0);
      e[p] = val;
      errors.push_back(e);
    }
  }
  for (int p1 = 0; p1 < 8; ++p1) {
    for (int p2 = p1 + 1; p2 < 8; ++p2) {
      for (GfElem v1 = 1; v1 < 16; ++v1) {
        for (GfElem v2 = 1; v2 < 16; ++v2) {
          Row e(8, 0);
          e[p1] = v1;
          e[p2] = v2;
          errors.push_back(e);
        }
      }
    }
  }

  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t mi = rng.below(static_cast<std::uint32_t>(table.words.size()));
    const Row& word = table.words[mi];
    for (const Row& err : errors) {
      Row received(8);
      for (int i = 0; i < 8; ++i) received[i] = Field::add(word[i], err[i]);
      auto dec = code.decode(received, 2);
      REQUIRE(dec.has_value());
      REQUIRE(dec->message == table.messages[mi]);
      REQUIRE(dec->error == err);
    }
  }

  // brute-force oracle spot checks; the acceptance suite runs the full sweep
  for (int i = 0; i < 300; ++i) {
    const std::size_t mi = rng.below(static_cast<std::uint32_t>(table.words.size()));
    const Row& err = errors[rng.below(static_cast<std::uint32_t>(errors.size()))];
    Row received(8);
    for (int j = 0; j < 8; ++j) {
      received[j] = Field::add(table.words[mi][j], err[j]);
    }
    REQUIRE(table.nearest(received) == mi);
  }
}

TEST_CASE("beyond-capacity errors never produce a wrong in-budget answer") {
  auto f = make_field(4);
  GrsCode code = small_code(f, 8, 4, 17);
  SeededRng rng(18);
  int failures = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Row msg(4);
    for (auto& e : msg) e = static_cast<GfElem>(rng.below(16));
    Row word = code.encode(msg);
    // weight exactly t+1 = 3
    std::vector<std::uint32_t> idx(8);
    std::iota(idx.begin(), idx.end(), 0u);
    for (int i = 0; i < 3; ++i) {
      const std::size_t j = i + rng.below(static_cast<std::uint32_t>(8 - i));
      std::swap(idx[i], idx[j]);
      word[idx[i]] = Field::add(word[idx[i]],
                                static_cast<GfElem>(1 + rng.below(15)));
    }
    auto dec = code.decode(word, 2);
    if (!dec) {
      ++failures;
      continue;
    }
    // any answer the decoder does return must re-encode within budget,
    // which at weight t+1 distance means it cannot be a different codeword
    Row reencoded = code.encode(dec->message);
    std::size_t dist = 0;
    for (int i = 0; i < 8; ++i) {
      if (reencoded[i] != word[i]) ++dist;
    }
    REQUIRE(dist <= 2);
  }
  CHECK(failures > 0);
}

TEST_CASE("decode rejects oversized error budgets and bad lengths") {
  auto f = make_field(8);
  GrsCode code = small_code(f, 16, 8, 19);
  Row word(16, 0);
  CHECK_THROWS_AS(code.decode(word, 5), InvalidParameters);
  CHECK_THROWS_AS(code.decode(Row(15, 0), 4), DimensionMismatch);
}

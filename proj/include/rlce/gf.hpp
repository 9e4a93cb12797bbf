#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace rlce {

/// A field element, stored as the integer value of its bit-polynomial.
using GfElem = std::uint16_t;

/// Arithmetic context for GF(2^m), 4 <= m <= 12.
///
/// Multiplication and inversion run through log/antilog tables built once at
/// construction from a primitive reduction polynomial. The context is
/// immutable afterwards and safe to share across threads.
class Field {
 public:
  static constexpr int kMinDegree = 4;
  static constexpr int kMaxDegree = 12;

  /// Builds GF(2^m) with the fixed per-degree reduction polynomial.
  explicit Field(int degree);

  /// Builds GF(2^m) with an explicit reduction polynomial (degree-m bit set).
  /// Throws InvalidParameters if the polynomial is not primitive.
  Field(int degree, std::uint32_t reduction_poly);

  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t reduction_poly() const { return poly_; }
  std::size_t element_bytes() const { return m_ <= 8 ? 1 : 2; }

  static GfElem add(GfElem a, GfElem b) { return a ^ b; }

  GfElem mul(GfElem a, GfElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<std::uint32_t>(log_[a]) + log_[b]];
  }

  /// Multiplicative inverse; throws DivisionByZero for 0.
  GfElem inv(GfElem a) const;

  /// a^e with a^0 = 1; negative exponents invert (0 with e < 0 throws).
  GfElem pow(GfElem a, long long e) const;

  /// Power of the fixed generator x, index taken mod q-1.
  GfElem exp(std::uint32_t i) const { return exp_[i % (q_ - 1)]; }

  /// Discrete log of a nonzero element w.r.t. the fixed generator.
  std::uint32_t log(GfElem a) const;

  bool contains(GfElem a) const { return a < q_; }

  bool operator==(const Field& other) const {
    return m_ == other.m_ && poly_ == other.poly_;
  }

  /// Fixed reduction polynomial for a degree: pinned constants for m = 8, 9,
  /// 10, otherwise the smallest primitive polynomial of that degree.
  static std::uint32_t default_poly(int degree);

 private:
  void build_tables();

  int m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t poly_ = 0;
  std::vector<GfElem> exp_;         // doubled: exp_[i + q - 1] = exp_[i]
  std::vector<std::uint16_t> log_;  // log_[0] is unused
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(int degree);

}  // namespace rlce

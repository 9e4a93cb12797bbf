#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rlce/linalg.hpp"

namespace rlce {

/// Generalized Reed-Solomon code: codewords are (v_j * f(alpha_j))_j for
/// polynomials f of degree below k, over n pairwise-distinct evaluation
/// points alpha with nonzero column multipliers v. MDS with d = n - k + 1;
/// the decoder corrects up to floor((n-k)/2) symbol errors.
class GrsCode {
 public:
  GrsCode(FieldPtr field, std::vector<GfElem> alpha, std::vector<GfElem> v,
          std::size_t k);

  /// alpha drawn as a uniform n-subset of the field (in random order),
  /// multipliers uniform nonzero.
  static GrsCode random(FieldPtr field, std::size_t n, std::size_t k,
                        RandomSource& rng);

  std::size_t length() const { return alpha_.size(); }
  std::size_t dimension() const { return k_; }
  std::size_t capacity() const { return (alpha_.size() - k_) / 2; }
  const FieldPtr& field() const { return field_; }
  const std::vector<GfElem>& alpha() const { return alpha_; }
  const std::vector<GfElem>& multipliers() const { return v_; }

  /// k x n matrix with entry (i, j) = v_j * alpha_j^i.
  Matrix generator_matrix() const;

  Row encode(std::span<const GfElem> message) const;

  struct Decoded {
    Row message;  // polynomial coefficients, length k
    Row error;    // length n
  };

  /// Bounded-distance decoding of up to t errors (2t <= n - k). Returns the
  /// unique (message, error) with weight(error) <= t when one exists,
  /// otherwise nullopt. Callers enforcing a tighter weight bound must
  /// re-check the returned error themselves.
  std::optional<Decoded> decode(std::span<const GfElem> received,
                                std::size_t t) const;

 private:
  struct View;  // decoding view over a subset of positions

  std::optional<Decoded> decode_view(const View& view,
                                     std::span<const GfElem> full_received,
                                     std::size_t t) const;

  FieldPtr field_;
  std::vector<GfElem> alpha_;
  std::vector<GfElem> v_;
  std::vector<GfElem> dual_v_;  // parity multipliers of the dual code
  std::size_t k_ = 0;
  std::optional<std::size_t> zero_pos_;
};

}  // namespace rlce

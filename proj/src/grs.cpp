#include "rlce/grs.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rlce/errors.hpp"

namespace rlce {

namespace {

// Coefficient order throughout: p[0] + p[1] x + p[2] x^2 + ...

GfElem poly_eval(const Field& f, std::span<const GfElem> p, GfElem x) {
  GfElem acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = Field::add(f.mul(acc, x), p[i]);
  }
  return acc;
}

std::size_t poly_degree(std::span<const GfElem> p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

Row poly_mul_mod(const Field& f, std::span<const GfElem> a,
                 std::span<const GfElem> b, std::size_t mod_degree) {
  Row out(std::min(mod_degree, a.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), mod_degree - std::min(i, mod_degree));
    for (std::size_t j = 0; j < jmax; ++j) {
      if (i + j >= mod_degree) break;
      out[i + j] = Field::add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

// Formal derivative in characteristic 2: even-power terms vanish.
Row poly_derivative(std::span<const GfElem> p) {
  if (p.size() <= 1) return Row{0};
  Row d(p.size() - 1, 0);
  for (std::size_t j = 1; j < p.size(); j += 2) {
    d[j - 1] = p[j];
  }
  return d;
}

// Minimal LFSR synthesis for the syndrome sequence; returns the connection
// polynomial sigma with sigma[0] = 1.
Row berlekamp_massey(const Field& f, std::span<const GfElem> syndromes) {
  Row sigma{1};
  Row prev{1};
  std::size_t L = 0;
  GfElem prev_disc = 1;
  std::size_t shift = 1;
  for (std::size_t i = 0; i < syndromes.size(); ++i) {
    GfElem d = syndromes[i];
    for (std::size_t l = 1; l <= L && l < sigma.size(); ++l) {
      d = Field::add(d, f.mul(sigma[l], syndromes[i - l]));
    }
    if (d == 0) {
      ++shift;
      continue;
    }
    const GfElem coef = f.mul(d, f.inv(prev_disc));
    if (2 * L <= i) {
      Row saved = sigma;
      if (sigma.size() < prev.size() + shift) sigma.resize(prev.size() + shift, 0);
      for (std::size_t j = 0; j < prev.size(); ++j) {
        sigma[j + shift] = Field::add(sigma[j + shift], f.mul(coef, prev[j]));
      }
      L = i + 1 - L;
      prev = std::move(saved);
      prev_disc = d;
      shift = 1;
    } else {
      if (sigma.size() < prev.size() + shift) sigma.resize(prev.size() + shift, 0);
      for (std::size_t j = 0; j < prev.size(); ++j) {
        sigma[j + shift] = Field::add(sigma[j + shift], f.mul(coef, prev[j]));
      }
      ++shift;
    }
  }
  sigma.resize(poly_degree(sigma) + 1);
  return sigma;
}

// Interpolation through (xs[i], ys[i]) via the master polynomial and
// synthetic division; O(n^2).
Row interpolate(const Field& f, std::span<const GfElem> xs,
                std::span<const GfElem> ys) {
  const std::size_t n = xs.size();
  Row master(n + 1, 0);
  master[0] = 1;
  std::size_t deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // master *= (x + xs[i]), in place from the top coefficient down
    for (std::size_t j = deg + 1; j-- > 0;) {
      const GfElem scaled = f.mul(master[j], xs[i]);
      master[j + 1] = Field::add(master[j + 1], master[j]);
      master[j] = scaled;
    }
    ++deg;
  }
  Row result(n, 0);
  Row quotient(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    // quotient = master / (x + xs[i]) by synthetic division
    GfElem carry = master[n];
    for (std::size_t j = n; j-- > 0;) {
      quotient[j] = carry;
      carry = Field::add(master[j], f.mul(xs[i], carry));
    }
    const GfElem denom = poly_eval(f, quotient, xs[i]);
    const GfElem scale = f.mul(ys[i], f.inv(denom));
    if (scale == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      result[j] = Field::add(result[j], f.mul(scale, quotient[j]));
    }
  }
  return result;
}

}  // namespace

struct GrsCode::View {
  std::vector<std::size_t> positions;  // indices into the full code
  std::vector<GfElem> alpha;
  std::vector<GfElem> dual;
  std::size_t t_cap = 0;
};

GrsCode::GrsCode(FieldPtr field, std::vector<GfElem> alpha,
                 std::vector<GfElem> v, std::size_t k)
    : field_(std::move(field)),
      alpha_(std::move(alpha)),
      v_(std::move(v)),
      k_(k) {
  if (!field_) throw InvalidParameters("missing field context");
  const std::size_t n = alpha_.size();
  const Field& f = *field_;
  if (v_.size() != n || k_ == 0 || k_ > n || n > f.order()) {
    throw InvalidParameters("code parameters must satisfy 1 <= k <= n <= q");
  }
  std::vector<bool> seen(f.order(), false);
  for (std::size_t j = 0; j < n; ++j) {
    if (!f.contains(alpha_[j]) || !f.contains(v_[j]) || v_[j] == 0) {
      throw InvalidParameters("evaluation points must lie in the field and "
                              "multipliers must be nonzero");
    }
    if (seen[alpha_[j]]) {
      throw InvalidParameters("evaluation points must be pairwise distinct");
    }
    seen[alpha_[j]] = true;
    if (alpha_[j] == 0) zero_pos_ = j;
  }
  dual_v_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    GfElem prod = v_[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      prod = f.mul(prod, Field::add(alpha_[j], alpha_[i]));
    }
    dual_v_[j] = f.inv(prod);
  }
}

GrsCode GrsCode::random(FieldPtr field, std::size_t n, std::size_t k,
                        RandomSource& rng) {
  if (!field) throw InvalidParameters("missing field context");
  const std::uint32_t q = field->order();
  if (k == 0 || k > n || n > q) {
    throw InvalidParameters("code parameters must satisfy 1 <= k <= n <= q");
  }
  std::vector<GfElem> pool(q);
  std::iota(pool.begin(), pool.end(), GfElem{0});
  std::vector<GfElem> alpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.below(static_cast<std::uint32_t>(q - i));
    std::swap(pool[i], pool[j]);
    alpha[i] = pool[i];
  }
  std::vector<GfElem> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<GfElem>(1 + rng.below(q - 1));
  }
  return GrsCode(std::move(field), std::move(alpha), std::move(v), k);
}

Matrix GrsCode::generator_matrix() const {
  const Field& f = *field_;
  const std::size_t n = alpha_.size();
  Matrix g(field_, k_, n);
  for (std::size_t j = 0; j < n; ++j) {
    GfElem acc = v_[j];
    for (std::size_t i = 0; i < k_; ++i) {
      g.at(i, j) = acc;
      acc = f.mul(acc, alpha_[j]);
    }
  }
  return g;
}

Row GrsCode::encode(std::span<const GfElem> message) const {
  if (message.size() != k_) {
    throw DimensionMismatch("message length " + std::to_string(message.size()) +
                            " does not match dimension " + std::to_string(k_));
  }
  const Field& f = *field_;
  const std::size_t n = alpha_.size();
  Row c(n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = f.mul(v_[j], poly_eval(f, message, alpha_[j]));
  }
  return c;
}

std::optional<GrsCode::Decoded> GrsCode::decode_view(
    const View& view, std::span<const GfElem> y, std::size_t t) const {
  const Field& f = *field_;
  const std::size_t n = alpha_.size();
  const std::size_t vn = view.positions.size();
  const std::size_t tt = std::min(t, view.t_cap);

  Row syndromes(2 * tt, 0);
  if (tt > 0) {
    for (std::size_t l = 0; l < vn; ++l) {
      const std::size_t pos = view.positions[l];
      GfElem term = f.mul(y[pos], view.dual[l]);
      if (term == 0) continue;
      for (std::size_t i = 0; i < 2 * tt; ++i) {
        syndromes[i] = Field::add(syndromes[i], term);
        term = f.mul(term, view.alpha[l]);
        if (term == 0) break;  // zero evaluation point feeds S_0 only
      }
    }
  }

  Row sigma = berlekamp_massey(f, syndromes);
  const std::size_t errs = poly_degree(sigma);
  if (errs > tt) return std::nullopt;

  std::vector<std::size_t> err_view;  // view-local indices
  if (errs > 0) {
    err_view.reserve(errs);
    for (std::size_t l = 0; l < vn; ++l) {
      if (view.alpha[l] == 0) continue;
      if (poly_eval(f, sigma, f.inv(view.alpha[l])) == 0) {
        err_view.push_back(l);
        if (err_view.size() > errs) return std::nullopt;
      }
    }
    if (err_view.size() != errs) return std::nullopt;
  }

  Row e_full(n, 0);
  if (errs > 0) {
    const Row omega = poly_mul_mod(f, sigma, syndromes, 2 * tt);
    const Row sigma_deriv = poly_derivative(sigma);
    for (std::size_t l : err_view) {
      const GfElem x = view.alpha[l];
      const GfElem x_inv = f.inv(x);
      const GfElem denom = poly_eval(f, sigma_deriv, x_inv);
      if (denom == 0) return std::nullopt;
      const GfElem magnitude =
          f.mul(x, f.mul(poly_eval(f, omega, x_inv), f.inv(denom)));
      if (magnitude == 0) return std::nullopt;
      e_full[view.positions[l]] = f.mul(magnitude, f.inv(view.dual[l]));
    }
  }

  // Interpolate the message polynomial through k positions the locator left
  // untouched, then verify against the whole received word.
  std::vector<GfElem> xs, ys;
  xs.reserve(k_);
  ys.reserve(k_);
  for (std::size_t l = 0; l < vn && xs.size() < k_; ++l) {
    const std::size_t pos = view.positions[l];
    if (e_full[pos] != 0) continue;
    xs.push_back(view.alpha[l]);
    ys.push_back(f.mul(y[pos], f.inv(v_[pos])));
  }
  if (xs.size() < k_) return std::nullopt;
  Row message = interpolate(f, xs, ys);

  Row codeword = encode(message);
  Row error(n);
  for (std::size_t j = 0; j < n; ++j) {
    error[j] = Field::add(y[j], codeword[j]);
  }
  if (hamming_weight(error) > t) return std::nullopt;
  return Decoded{std::move(message), std::move(error)};
}

std::optional<GrsCode::Decoded> GrsCode::decode(
    std::span<const GfElem> received, std::size_t t) const {
  const std::size_t n = alpha_.size();
  if (received.size() != n) {
    throw DimensionMismatch("received word length does not match code length");
  }
  if (2 * t > n - k_) {
    throw InvalidParameters("error budget exceeds decoding capacity");
  }

  View full;
  full.positions.resize(n);
  std::iota(full.positions.begin(), full.positions.end(), std::size_t{0});
  full.alpha = alpha_;
  full.dual = dual_v_;
  full.t_cap = (n - k_) / 2;
  if (auto r = decode_view(full, received, t)) return r;

  // A zero evaluation point has no multiplicative locator, so an error there
  // is invisible to the search above. Retry with that position punctured;
  // the remaining errors fit the reduced capacity.
  if (zero_pos_ && n - 1 >= k_ && t > 0) {
    const Field& f = *field_;
    View punct;
    punct.positions.reserve(n - 1);
    punct.alpha.reserve(n - 1);
    punct.dual.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == *zero_pos_) continue;
      punct.positions.push_back(j);
      punct.alpha.push_back(alpha_[j]);
      punct.dual.push_back(f.mul(dual_v_[j], alpha_[j]));
    }
    punct.t_cap = (n - 1 - k_) / 2;
    if (auto r = decode_view(punct, received, t)) return r;
  }
  return std::nullopt;
}

}  // namespace rlce

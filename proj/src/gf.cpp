#include "rlce/gf.hpp"

#include <string>

#include "rlce/errors.hpp"

namespace rlce {

namespace {

// Walks the powers of x modulo poly; returns true when x visits every nonzero
// element exactly once before closing the cycle, i.e. poly is primitive.
bool generator_has_full_order(int degree, std::uint32_t poly) {
  const std::uint32_t q = 1u << degree;
  std::vector<bool> seen(q, false);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    if (seen[x]) return false;
    seen[x] = true;
    x <<= 1;
    if (x & q) x ^= poly;
  }
  return x == 1;
}

}  // namespace

std::uint32_t Field::default_poly(int degree) {
  switch (degree) {
    case 8:
      return 0x11D;  // x^8 + x^4 + x^3 + x^2 + 1
    case 9:
      return 0x211;  // x^9 + x^4 + 1
    case 10:
      return 0x409;  // x^10 + x^3 + 1
    default:
      break;
  }
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw UnsupportedDegree("field degree " + std::to_string(degree) +
                            " outside supported range [4, 12]");
  }
  const std::uint32_t top = 1u << degree;
  for (std::uint32_t cand = top | 1; cand < (top << 1); cand += 2) {
    if (generator_has_full_order(degree, cand)) return cand;
  }
  throw Error("no primitive polynomial found");  // unreachable for m <= 12
}

Field::Field(int degree) : Field(degree, default_poly(degree)) {}

Field::Field(int degree, std::uint32_t reduction_poly)
    : m_(degree), poly_(reduction_poly) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw UnsupportedDegree("field degree " + std::to_string(degree) +
                            " outside supported range [4, 12]");
  }
  q_ = 1u << degree;
  if ((poly_ & q_) == 0 || (poly_ & 1u) == 0 || poly_ >= (q_ << 1)) {
    throw InvalidParameters("reduction polynomial must be monic of degree m "
                            "with nonzero constant term");
  }
  build_tables();
}

void Field::build_tables() {
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::vector<bool> seen(q_, false);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    if (seen[x]) {
      throw InvalidParameters("reduction polynomial is not primitive");
    }
    seen[x] = true;
    exp_[i] = static_cast<GfElem>(x);
    exp_[i + q_ - 1] = static_cast<GfElem>(x);
    log_[x] = static_cast<std::uint16_t>(i);
    x <<= 1;
    if (x & q_) x ^= poly_;
  }
  if (x != 1) {
    throw InvalidParameters("reduction polynomial is not primitive");
  }
}

GfElem Field::inv(GfElem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return exp_[(q_ - 1) - log_[a]];
}

std::uint32_t Field::log(GfElem a) const {
  if (a == 0) throw DivisionByZero("log of zero");
  return log_[a];
}

GfElem Field::pow(GfElem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return e == 0 ? GfElem{1} : GfElem{0};
  }
  const long long group = q_ - 1;
  long long r = e % group;
  if (r < 0) r += group;
  const std::uint64_t idx =
      (static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) %
      static_cast<std::uint64_t>(group);
  return exp_[idx];
}

FieldPtr make_field(int degree) { return std::make_shared<const Field>(degree); }

}  // namespace rlce

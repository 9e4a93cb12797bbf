#include "rlce/rng.hpp"

#include <openssl/rand.h>

#include <cstring>

#include "rlce/errors.hpp"

namespace rlce {

std::uint32_t RandomSource::below(std::uint32_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit =
      UINT64_MAX - (UINT64_MAX % static_cast<std::uint64_t>(bound));
  std::uint64_t r;
  do {
    r = next_u64();
  } while (r >= limit);
  return static_cast<std::uint32_t>(r % bound);
}

std::uint64_t SystemRng::next_u64() {
  unsigned char buf[8];
  if (RAND_bytes(buf, sizeof(buf)) != 1) {
    throw Error("system entropy source failed");
  }
  std::uint64_t v;
  std::memcpy(&v, buf, sizeof(v));
  return v;
}

}  // namespace rlce

#pragma once

#include <cstdint>
#include <random>

namespace rlce {

/// Injected randomness source. All key, code and error sampling flows through
/// one of these, so seeded runs are reproducible byte for byte.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  virtual std::uint64_t next_u64() = 0;

  /// Unbiased uniform draw in [0, bound); bound >= 1.
  std::uint32_t below(std::uint32_t bound);
};

/// Deterministic stream; identical output on every platform for a given seed.
class SeededRng final : public RandomSource {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next_u64() override { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// OS-entropy-backed source, the default for real key material.
class SystemRng final : public RandomSource {
 public:
  std::uint64_t next_u64() override;
};

}  // namespace rlce

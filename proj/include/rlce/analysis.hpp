#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rlce/scheme.hpp"

namespace rlce::analysis {

/// Componentwise (Schur) product of two equal-length vectors.
Row star_product(std::span<const GfElem> a, std::span<const GfElem> b,
                 const Field& field);

enum class CodeClass { kGrsLike, kRandomLike };

struct SquareCodeReport {
  std::size_t k = 0;
  std::size_t length = 0;      // number of columns of the input
  std::size_t square_dim = 0;  // dimension of the span of row-pair products
  std::size_t bound = 0;       // min(length, k(k+1)/2)
  CodeClass classification = CodeClass::kGrsLike;
};

/// Rank of the span of all products row_i * row_j (i <= j). Product rows are
/// generated lazily and inserted into an incremental elimination basis with
/// early exit at the bound, so the quadratic row count is never materialized.
/// A code whose square saturates the generic bound is classified random-like.
SquareCodeReport square_code_dimension(const Matrix& g);

/// Copy of g with one column deleted.
Matrix puncture(const Matrix& g, std::size_t column);

struct PunctureReport {
  std::size_t trial = 0;
  std::size_t column = 0;
  SquareCodeReport square;
};

/// Generates `trials` keypairs, punctures each public-key column in turn
/// (all columns when puncture_limit is 0) and reports the square-code
/// dimension of every punctured matrix.
std::vector<PunctureReport> distinguisher_experiment(
    const Params& params, std::size_t trials, RandomSource& rng,
    std::size_t puncture_limit = 0);

/// Fraction of reports whose square dimension reached the generic bound.
double random_like_fraction(std::span<const PunctureReport> reports);

struct EquivalentBlocks {
  std::vector<Matrix> c_blocks;  // n blocks, k x r
  std::vector<Matrix> a_blocks;  // n blocks, (r+1) x (r+1), invertible
};

/// Writes a target full-rank R (k x n(r+1)) as [g_0, C_0, ..., g_{n-1},
/// C_{n-1}] * diag(A_0, ..., A_{n-1}) over the given code's generator
/// columns. Returns nullopt when r + 1 < k, where no such factorization is
/// guaranteed.
std::optional<EquivalentBlocks> construct_equivalent(const Matrix& target,
                                                     const GrsCode& code,
                                                     std::size_t r,
                                                     RandomSource& rng);

struct ColumnFactorization {
  Matrix s;   // k x k, invertible
  Matrix c0;  // k x r
  Matrix a0;  // (r+1) x (r+1), invertible
};

/// Factors a full-column-rank k x (r+1) target as S [g0 | C0] A0. Returns
/// nullopt when the target is rank-deficient.
std::optional<ColumnFactorization> factor_column_block(
    const Matrix& target, std::span<const GfElem> g0, std::size_t r,
    RandomSource& rng);

/// Draws a uniform full-rank k x (r+1) target, factors it through the code's
/// first generator column and verifies the product reproduces the target.
bool check_random_block_factorization(const GrsCode& code, std::size_t r,
                                     RandomSource& rng);

enum class IsdAlgorithm { kPrange, kLeeBrickell };

struct IsdEstimate {
  std::size_t n = 0, k = 0, t = 0;
  std::uint64_t q = 0;
  IsdAlgorithm algorithm = IsdAlgorithm::kPrange;
  std::size_t p = 0;  // error positions allowed inside the information set
  long double log2_iterations = 0;
  long double log2_cost = 0;  // bit operations
};

/// Closed-form information-set-decoding work factor.
///
/// One iteration draws an information set and runs Gaussian elimination,
/// (n-k)^2 (n+k) / 2 field operations. Prange succeeds when all t errors
/// avoid the set: C(n,t) / C(n-k,t) expected iterations. Lee-Brickell allows
/// p errors inside the set, trading C(k,p) (q-1)^p candidate checks of
/// p (n-k) operations each per iteration for a C(n,t) / (C(n-k,t-p) C(k,p))
/// iteration count; p is optimized. Field operations are costed at
/// (log2 q)^2 bit operations; all combinatorics run in log space through
/// lgammal.
IsdEstimate isd_workfactor(std::size_t n, std::size_t k, std::size_t t,
                           std::uint64_t q, IsdAlgorithm algorithm);

}  // namespace rlce::analysis

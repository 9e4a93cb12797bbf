#include "rlce/analysis.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "rlce/errors.hpp"

namespace rlce::analysis {

namespace {

// Incremental row-space basis in echelon form, keyed by pivot column.
class IncrementalBasis {
 public:
  IncrementalBasis(const Field& field, std::size_t width)
      : field_(field), width_(width), pivot_row_(width, kNoRow) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces the row against the basis; absorbs any nonzero remainder.
  void insert(Row row) {
    for (std::size_t col = 0; col < width_; ++col) {
      if (row[col] == 0) continue;
      const std::size_t r = pivot_row_[col];
      if (r == kNoRow) {
        const GfElem scale = field_.inv(row[col]);
        if (scale != 1) {
          for (std::size_t j = col; j < width_; ++j) {
            row[j] = field_.mul(row[j], scale);
          }
        }
        pivot_row_[col] = rows_.size();
        rows_.push_back(std::move(row));
        return;
      }
      const GfElem c = row[col];
      const Row& basis = rows_[r];
      for (std::size_t j = col; j < width_; ++j) {
        row[j] = Field::add(row[j], field_.mul(c, basis[j]));
      }
    }
  }

 private:
  static constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);
  const Field& field_;
  std::size_t width_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Row> rows_;
};

long double log2_factorial(std::uint64_t n) {
  return lgammal(static_cast<long double>(n) + 1.0L) / logl(2.0L);
}

long double log2_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<long double>::infinity();
  return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k);
}

long double log2_sum(long double a, long double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<long double>::infinity()) return a;
  return a + log2l(1.0L + exp2l(b - a));
}

}  // namespace

Row star_product(std::span<const GfElem> a, std::span<const GfElem> b,
                 const Field& field) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("star product of unequal-length vectors");
  }
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.mul(a[i], b[i]);
  return out;
}

SquareCodeReport square_code_dimension(const Matrix& g) {
  const Field& field = *g.field();
  const std::size_t k = g.rows();
  const std::size_t width = g.cols();
  const std::size_t bound = std::min(width, k * (k + 1) / 2);

  IncrementalBasis basis(field, width);
  for (std::size_t i = 0; i < k && basis.rank() < bound; ++i) {
    for (std::size_t j = i; j < k && basis.rank() < bound; ++j) {
      basis.insert(star_product(g.row(i), g.row(j), field));
    }
  }

  SquareCodeReport report;
  report.k = k;
  report.length = width;
  report.square_dim = basis.rank();
  report.bound = bound;
  report.classification = report.square_dim == bound ? CodeClass::kRandomLike
                                                     : CodeClass::kGrsLike;
  return report;
}

Matrix puncture(const Matrix& g, std::size_t column) {
  if (column >= g.cols()) {
    throw IndexOutOfRange("punctured column " + std::to_string(column) +
                          " out of range for width " + std::to_string(g.cols()));
  }
  Matrix out(g.field(), g.rows(), g.cols() - 1);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::span<const GfElem> src = g.row(r);
    std::span<GfElem> dst = out.row(r);
    std::copy(src.begin(), src.begin() + column, dst.begin());
    std::copy(src.begin() + column + 1, src.end(), dst.begin() + column);
  }
  return out;
}

std::vector<PunctureReport> distinguisher_experiment(
    const Params& params, std::size_t trials, RandomSource& rng,
    std::size_t puncture_limit) {
  std::vector<PunctureReport> reports;
  const std::size_t width = params.public_length();
  const std::size_t per_trial =
      puncture_limit == 0 ? width : std::min(puncture_limit, width);
  reports.resize(trials * per_trial);

  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const KeyPair pair = keygen(params, rng);
    PunctureReport* out = reports.data() + trial * per_trial;

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= per_trial) return;
        out[c] = PunctureReport{
            trial, c, square_code_dimension(puncture(pair.pub.G, c))};
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();
  }
  return reports;
}

double random_like_fraction(std::span<const PunctureReport> reports) {
  if (reports.empty()) return 0.0;
  std::size_t hits = 0;
  for (const PunctureReport& r : reports) {
    if (r.square.classification == CodeClass::kRandomLike) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(reports.size());
}

std::optional<EquivalentBlocks> construct_equivalent(const Matrix& target,
                                                     const GrsCode& code,
                                                     std::size_t r,
                                                     RandomSource& rng) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  const std::size_t w = r + 1;
  if (w < k) return std::nullopt;
  if (target.rows() != k || target.cols() != n * w) {
    throw DimensionMismatch("target must be k x n(r+1)");
  }
  const FieldPtr& field = code.field();
  Matrix gs = code.generator_matrix();

  EquivalentBlocks blocks;
  blocks.c_blocks.reserve(n);
  blocks.a_blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Row gi = gs.column(i);
    Matrix c_block;
    Matrix extended_inv;
    // random completion of [g_i | C_i] to an invertible (r+1) x (r+1)
    for (;;) {
      c_block = Matrix::random(field, k, r, rng);
      Matrix extended(field, w, w);
      for (std::size_t row = 0; row < k; ++row) {
        extended.at(row, 0) = gi[row];
        for (std::size_t c = 0; c < r; ++c) {
          extended.at(row, 1 + c) = c_block.at(row, c);
        }
      }
      for (std::size_t row = k; row < w; ++row) {
        for (std::size_t c = 0; c < w; ++c) {
          extended.at(row, c) = static_cast<GfElem>(rng.below(field->order()));
        }
      }
      if (auto inv = extended.try_inverse()) {
        extended_inv = std::move(*inv);
        break;
      }
    }
    // Extend the target block with random rows, preferring an invertible
    // A_i. Exactness of the reconstruction never depends on that preference:
    // the top k rows of the extension pin G_i * A_i = R_i regardless.
    const Matrix target_block = target.columns(i * w, w);
    for (int attempt = 0;; ++attempt) {
      Matrix extended_target(field, w, w);
      for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t c = 0; c < w; ++c) {
          extended_target.at(row, c) = target_block.at(row, c);
        }
      }
      for (std::size_t row = k; row < w; ++row) {
        for (std::size_t c = 0; c < w; ++c) {
          extended_target.at(row, c) =
              static_cast<GfElem>(rng.below(field->order()));
        }
      }
      Matrix a_block = extended_inv * extended_target;
      if (a_block.try_inverse() || w == k || attempt >= 100) {
        blocks.a_blocks.push_back(std::move(a_block));
        break;
      }
    }
    blocks.c_blocks.push_back(std::move(c_block));
  }
  return blocks;
}

namespace {

// Row operations sending a full-column-rank matrix to [I; 0], captured as an
// invertible k x k factor U with U * m = [I; 0].
std::optional<Matrix> reduction_factor(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix aug(m.field(), rows, cols + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, cols + r) = 1;
  }
  RrefResult reduced = aug.rref();
  // full column rank iff the first `cols` columns are all pivots
  if (reduced.pivots.size() < cols) return std::nullopt;
  for (std::size_t i = 0; i < cols; ++i) {
    if (reduced.pivots[i] != i) return std::nullopt;
  }
  return reduced.matrix.columns(cols, rows);
}

}  // namespace

std::optional<ColumnFactorization> factor_column_block(
    const Matrix& target, std::span<const GfElem> g0, std::size_t r,
    RandomSource& rng) {
  const std::size_t k = target.rows();
  const std::size_t w = r + 1;
  if (target.cols() != w || g0.size() != k || w > k) {
    throw DimensionMismatch("target must be k x (r+1) with r+1 <= k");
  }
  if (hamming_weight(g0) == 0) {
    throw InvalidParameters("generator column must be nonzero");
  }
  const FieldPtr& field = target.field();

  // random invertible A0, folded into the target before reduction
  Matrix a0 = Matrix::random_nonsingular(field, w, rng);
  Matrix shifted = target * a0.inverse();
  auto u_target = reduction_factor(shifted);
  if (!u_target) return std::nullopt;  // target not of full column rank

  Matrix c0;
  std::optional<Matrix> u_completion;
  for (;;) {
    c0 = Matrix::random(field, k, r, rng);
    Matrix completed(field, k, w);
    completed.set_column(0, g0);
    completed.set_columns(1, c0);
    u_completion = reduction_factor(completed);
    if (u_completion) break;
  }
  // u_c * [g0|C0] = [I; 0] = u_t * target * A0^{-1}, so
  // target = u_t^{-1} u_c [g0|C0] A0.
  Matrix s = u_target->inverse() * *u_completion;
  return ColumnFactorization{std::move(s), std::move(c0), std::move(a0)};
}

bool check_random_block_factorization(const GrsCode& code, std::size_t r,
                                     RandomSource& rng) {
  const std::size_t k = code.dimension();
  const std::size_t w = r + 1;
  const FieldPtr& field = code.field();
  Matrix target;
  for (;;) {
    target = Matrix::random(field, k, w, rng);
    if (target.rank() == w) break;
  }
  const Row g0 = code.generator_matrix().column(0);
  auto fact = factor_column_block(target, g0, r, rng);
  if (!fact) return false;
  Matrix completed(field, k, w);
  completed.set_column(0, g0);
  completed.set_columns(1, fact->c0);
  return fact->s * completed * fact->a0 == target;
}

IsdEstimate isd_workfactor(std::size_t n, std::size_t k, std::size_t t,
                           std::uint64_t q, IsdAlgorithm algorithm) {
  if (k == 0 || k >= n || q < 2 || t > n) {
    throw InvalidParameters("isd estimate requires 0 < k < n, t <= n, q >= 2");
  }
  const long double log2_q = log2l(static_cast<long double>(q));
  const long double fieldop_bits = log2_q * log2_q;
  const long double elim_ops = 0.5L * static_cast<long double>(n - k) *
                               static_cast<long double>(n - k) *
                               static_cast<long double>(n + k);
  const long double elim_log2 = log2l(elim_ops * fieldop_bits);

  IsdEstimate best;
  best.n = n;
  best.k = k;
  best.t = t;
  best.q = q;
  best.algorithm = algorithm;
  best.log2_cost = std::numeric_limits<long double>::infinity();

  const std::size_t p_max =
      algorithm == IsdAlgorithm::kPrange ? 0 : std::min(t, k);
  bool feasible = false;
  for (std::size_t p = 0; p <= p_max; ++p) {
    if (t - p > n - k) continue;  // errors cannot fit outside the set
    feasible = true;
    const long double iters = log2_binomial(n, t) -
                              log2_binomial(n - k, t - p) -
                              log2_binomial(k, p);
    long double per_iter = elim_log2;
    if (p > 0) {
      const long double candidates =
          log2_binomial(k, p) +
          static_cast<long double>(p) * log2l(static_cast<long double>(q - 1));
      const long double match_ops = log2l(
          static_cast<long double>(p) * static_cast<long double>(n - k) *
          fieldop_bits);
      per_iter = log2_sum(elim_log2, candidates + match_ops);
    }
    const long double total = iters + per_iter;
    if (total < best.log2_cost) {
      best.p = p;
      best.log2_iterations = iters;
      best.log2_cost = total;
    }
  }
  if (!feasible) {
    throw InvalidParameters("no split places t errors across the code");
  }
  return best;
}

}  // namespace rlce::analysis

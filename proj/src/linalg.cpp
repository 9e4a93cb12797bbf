#include "rlce/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rlce/errors.hpp"

namespace rlce {

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !(*a == *b)) {
    throw DimensionMismatch("operands belong to different field contexts");
  }
}

// In-place elimination to (reduced) row echelon form with first-nonzero pivot
// selection; returns the pivot columns in order.
std::vector<std::size_t> eliminate(Matrix& m, bool reduced) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
    std::size_t pivot = next_row;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != next_row) {
      for (std::size_t j = col; j < cols; ++j) {
        std::swap(m.at(pivot, j), m.at(next_row, j));
      }
    }
    const GfElem lead_inv = f.inv(m.at(next_row, col));
    if (lead_inv != 1) {
      for (std::size_t j = col; j < cols; ++j) {
        m.at(next_row, j) = f.mul(m.at(next_row, j), lead_inv);
      }
    }
    const std::size_t from = reduced ? 0 : next_row + 1;
    for (std::size_t r = from; r < rows; ++r) {
      if (r == next_row) continue;
      const GfElem c = m.at(r, col);
      if (c == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        m.at(r, j) = Field::add(m.at(r, j), f.mul(c, m.at(next_row, j)));
      }
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

std::size_t hamming_weight(std::span<const GfElem> v) {
  std::size_t w = 0;
  for (GfElem e : v) {
    if (e != 0) ++w;
  }
  return w;
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::random(FieldPtr field, std::size_t rows, std::size_t cols,
                      RandomSource& rng) {
  Matrix m(std::move(field), rows, cols);
  const std::uint32_t q = m.field()->order();
  for (GfElem& e : m.data_) e = static_cast<GfElem>(rng.below(q));
  return m;
}

Matrix Matrix::random_nonsingular(FieldPtr field, std::size_t n,
                                  RandomSource& rng) {
  return random_nonsingular_with_inverse(std::move(field), n, rng).first;
}

std::pair<Matrix, Matrix> Matrix::random_nonsingular_with_inverse(
    FieldPtr field, std::size_t n, RandomSource& rng) {
  if (n == 0) throw InvalidParameters("empty matrix cannot be nonsingular");
  for (;;) {
    Matrix m = random(field, n, n, rng);
    if (auto inv = m.try_inverse()) {
      return {std::move(m), std::move(*inv)};
    }
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::columns(std::size_t start, std::size_t count) const {
  if (start + count > cols_) throw IndexOutOfRange("column slice out of range");
  Matrix s(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) s.at(r, c) = at(r, start + c);
  }
  return s;
}

void Matrix::set_columns(std::size_t start, const Matrix& block) {
  if (block.rows_ != rows_ || start + block.cols_ > cols_) {
    throw DimensionMismatch("column block does not fit");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < block.cols_; ++c) {
      at(r, start + c) = block.at(r, c);
    }
  }
}

void Matrix::set_column(std::size_t col, std::span<const GfElem> values) {
  if (col >= cols_ || values.size() != rows_) {
    throw DimensionMismatch("column assignment does not fit");
  }
  for (std::size_t r = 0; r < rows_; ++r) at(r, col) = values[r];
}

Row Matrix::column(std::size_t col) const {
  if (col >= cols_) throw IndexOutOfRange("column index out of range");
  Row v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, col);
  return v;
}

Row Matrix::left_mul(std::span<const GfElem> v) const {
  if (v.size() != rows_) {
    throw DimensionMismatch("row vector length " + std::to_string(v.size()) +
                            " does not match matrix rows " +
                            std::to_string(rows_));
  }
  const Field& f = *field_;
  Row out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const GfElem c = v[r];
    if (c == 0) continue;
    const GfElem* src = data_.data() + r * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      out[j] = Field::add(out[j], f.mul(c, src[j]));
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product " + std::to_string(a.rows()) +
                            "x" + std::to_string(a.cols()) + " * " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::span<GfElem> dst = out.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const GfElem c = a.at(i, l);
      if (c == 0) continue;
      std::span<const GfElem> src = b.row(l);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        dst[j] = Field::add(dst[j], f.mul(c, src[j]));
      }
    }
  }
  return out;
}

std::optional<Matrix> Matrix::try_inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  std::vector<std::size_t> pivots = eliminate(aug, true);
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() != rows_ - 1)) {
    return std::nullopt;
  }
  return aug.columns(cols_, cols_);
}

Matrix Matrix::inverse() const {
  if (auto inv = try_inverse()) return std::move(*inv);
  throw SingularMatrix("matrix has rank below " + std::to_string(rows_));
}

std::size_t Matrix::rank() const {
  Matrix work = *this;
  return eliminate(work, false).size();
}

RrefResult Matrix::rref() const {
  Matrix work = *this;
  std::vector<std::size_t> pivots = eliminate(work, true);
  return {std::move(work), std::move(pivots)};
}

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::uint32_t idx : map_) {
    if (idx >= map_.size() || seen[idx]) {
      throw InvalidParameters("permutation map is not a bijection");
    }
    seen[idx] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  return Permutation(std::move(map));
}

Permutation Permutation::random(std::size_t n, RandomSource& rng) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.below(static_cast<std::uint32_t>(i));
    std::swap(map[i - 1], map[j]);
  }
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::uint32_t i = 0; i < map_.size(); ++i) {
    inv[map_[i]] = i;
  }
  return Permutation(std::move(inv));
}

Row Permutation::apply(std::span<const GfElem> v, bool inverse) const {
  if (v.size() != map_.size()) {
    throw DimensionMismatch("vector length does not match permutation size");
  }
  Row out(v.size());
  if (inverse) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[map_[i]];
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) out[map_[i]] = v[i];
  }
  return out;
}

Matrix Permutation::permute_columns(const Matrix& m) const {
  if (m.cols() != map_.size()) {
    throw DimensionMismatch("matrix width does not match permutation size");
  }
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::span<const GfElem> src = m.row(r);
    std::span<GfElem> dst = out.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) dst[map_[c]] = src[c];
  }
  return out;
}

}  // namespace rlce

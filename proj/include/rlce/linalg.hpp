#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rlce/gf.hpp"
#include "rlce/rng.hpp"

namespace rlce {

using Row = std::vector<GfElem>;

std::size_t hamming_weight(std::span<const GfElem> v);

struct RrefResult;

/// Dense row-major matrix over a shared GF(2^m) context. Value-semantic;
/// operations never mutate their inputs.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix random(FieldPtr field, std::size_t rows, std::size_t cols,
                       RandomSource& rng);
  static Matrix random_nonsingular(FieldPtr field, std::size_t n,
                                   RandomSource& rng);
  /// Draws a uniform invertible matrix and returns it with its inverse.
  static std::pair<Matrix, Matrix> random_nonsingular_with_inverse(
      FieldPtr field, std::size_t n, RandomSource& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  GfElem at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  GfElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const GfElem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<GfElem> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  const std::vector<GfElem>& data() const { return data_; }
  std::vector<GfElem>& data() { return data_; }

  Matrix transpose() const;

  /// Column slice [start, start + count).
  Matrix columns(std::size_t start, std::size_t count) const;
  void set_columns(std::size_t start, const Matrix& block);
  void set_column(std::size_t col, std::span<const GfElem> values);
  Row column(std::size_t col) const;

  /// Row vector times matrix.
  Row left_mul(std::span<const GfElem> v) const;

  Matrix inverse() const;  // throws SingularMatrix
  std::optional<Matrix> try_inverse() const;

  std::size_t rank() const;

  RrefResult rref() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GfElem> data_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Permutation on {0, ..., N-1}, stored as an index map. apply() computes
/// v * P for the matrix P with P[i][map[i]] = 1; the inverse flag applies
/// P^{-1} instead.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> map);

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, RandomSource& rng);

  std::size_t size() const { return map_.size(); }
  const std::vector<std::uint32_t>& map() const { return map_; }

  Permutation inverse() const;

  Row apply(std::span<const GfElem> v, bool inverse = false) const;

  /// M * P: column j of the input lands in column map[j] of the result.
  Matrix permute_columns(const Matrix& m) const;

  bool operator==(const Permutation& other) const {
    return map_ == other.map_;
  }

 private:
  std::vector<std::uint32_t> map_;
};

}  // namespace rlce

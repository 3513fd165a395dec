#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "h90/field.hpp"

namespace h90 {

/// Dense matrix over F_p, row-major, one residue per byte. Linear maps act
/// on column vectors: a map U -> V is stored as a dim(V) x dim(U) matrix.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  /// Entries are reduced mod p, so negative literals are accepted.
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<std::vector<int>>& rows);
  static Matrix from_row_vectors(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const noexcept { return field_; }
  int p() const noexcept { return field_.p(); }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) noexcept { data_[r * cols_ + c] = v; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const;

  bool is_zero() const noexcept;
  Matrix transpose() const;
  Matrix pow(std::size_t k) const;
  Vec apply(std::span<const Elem> v) const;

  /// Row operation dst += coef * src through the active SIMD kernel.
  void add_row_multiple(std::size_t dst, std::size_t src, Elem coef);
  void scale_row(std::size_t r, Elem coef);
  void swap_rows(std::size_t a, std::size_t b) noexcept;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Stack vertically (same column count).
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  /// Place side by side (same row count).
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  const std::vector<Elem>& data() const noexcept { return data_; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Reduced row-echelon form, with zero rows kept at the bottom.
Matrix rref(const Matrix& m);
/// Reduced row-echelon form together with the pivot column of each nonzero row.
Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots);
std::size_t rank(const Matrix& m);
/// Throws h90::Error when m is not square or not invertible.
Matrix inverse(const Matrix& m);

}  // namespace h90

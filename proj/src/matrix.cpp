#include "h90/matrix.hpp"

#include <algorithm>
#include <utility>

#include "h90/kernels.hpp"

namespace h90 {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, 1);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<std::vector<int>>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.reduce(rows[r][c]));
  }
  return m;
}

Matrix Matrix::from_row_vectors(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row vector has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.reduce(rows[r][c]));
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column vector has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, f.reduce(cols[c][r]));
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::pow(std::size_t k) const {
  if (rows_ != cols_) throw Error("matrix power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error("vector length does not match matrix columns");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
    out[r] = static_cast<Elem>(acc % field_.p());
  }
  return out;
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, Elem coef) {
  if (coef == 0 || cols_ == 0) return;
  kernels::active().axpy(data_.data() + dst * cols_, data_.data() + src * cols_, coef,
                         static_cast<std::uint8_t>(field_.p()), cols_);
}

void Matrix::scale_row(std::size_t r, Elem coef) {
  if (cols_ == 0) return;
  kernels::active().scale(data_.data() + r * cols_, coef, static_cast<std::uint8_t>(field_.p()),
                          cols_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) noexcept {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix product dimension mismatch");
  if (!(field_ == rhs.field_)) throw Error("matrix product over different fields");
  Matrix out(field_, rows_, rhs.cols_);
  const auto& ops = kernels::active();
  const auto p = static_cast<std::uint8_t>(field_.p());
  if (rhs.cols_ == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (Elem c = at(r, k))
        ops.axpy(out.data_.data() + r * out.cols_, rhs.data_.data() + k * rhs.cols_, c, p,
                 rhs.cols_);
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum dimension mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], rhs.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference dimension mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], rhs.data_[k]);
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw Error("vstack column mismatch");
  Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw Error("hstack row mismatch");
  Matrix out(left.field_, left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) out.set(r, c, left.at(r, c));
    for (std::size_t c = 0; c < right.cols_; ++c) out.set(r, left.cols_ + c, right.at(r, c));
  }
  return out;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) out.set(a.rows_ + r, a.cols_ + c, b.at(r, c));
  return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots) {
  Matrix a = m;
  const Field& f = a.field();
  pivots.clear();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(sel, lead);
    a.scale_row(lead, f.inv(a.at(lead, c)));
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != lead && a.at(r, c) != 0) a.add_row_multiple(r, lead, f.neg(a.at(r, c)));
    pivots.push_back(c);
    ++lead;
  }
  return a;
}

Matrix rref(const Matrix& m) {
  std::vector<std::size_t> pivots;
  return rref(m, pivots);
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, pivots);
  return pivots.size();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> pivots;
  Matrix r = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)), pivots);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) throw Error("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.at(i, n + j));
  return inv;
}

}  // namespace h90

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dihom/errors.hpp"
#include "dihom/field.hpp"

namespace dihom {

template <Field F>
using Vector = std::vector<typename F::value_type>;

template <Field F>
Vector<F> zero_vector(const F& field, std::size_t n) {
  return Vector<F>(n, field.zero());
}

template <Field F>
Vector<F> unit_vector(const F& field, std::size_t n, std::size_t i) {
  Vector<F> v(n, field.zero());
  v[i] = field.one();
  return v;
}

template <Field F>
bool is_zero_vector(const F& field, std::span<const typename F::value_type> v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

/// y += c * x
template <Field F>
void axpy(const F& field, const typename F::value_type& c, std::span<const typename F::value_type> x,
          std::span<typename F::value_type> y) {
  if (field.is_zero(c)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!field.is_zero(x[i])) y[i] = field.add(y[i], field.mul(c, x[i]));
}

template <Field F>
Vector<F> scaled(const F& field, const typename F::value_type& c, std::span<const typename F::value_type> x) {
  Vector<F> out(x.size(), field.zero());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = field.mul(c, x[i]);
  return out;
}

/// Dense row-major matrix over a field. Columns are the coordinate vectors of a map's images.
template <Field F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const value_type& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zero(const F& field, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, field.zero()); }

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m = zero(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& columns) {
    Matrix m = zero(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      require_input(columns[c].size() == rows, "column length does not match matrix row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Vector<F> column(std::size_t c) const {
    Vector<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  std::vector<Vector<F>> columns() const {
    std::vector<Vector<F>> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  Matrix transposed() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.resize(data_.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <Field F>
Vector<F> apply(const F& field, const Matrix<F>& m, std::span<const typename F::value_type> v) {
  require_input(v.size() == m.cols(), "vector length does not match matrix column count");
  Vector<F> out(m.rows(), field.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto acc = field.zero();
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!field.is_zero(row[c]) && !field.is_zero(v[c])) acc = field.add(acc, field.mul(row[c], v[c]));
    out[r] = acc;
  }
  return out;
}

template <Field F>
Matrix<F> multiply(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  require_input(a.cols() == b.rows(), "matrix product dimension mismatch");
  Matrix<F> out = Matrix<F>::zero(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (field.is_zero(aik)) continue;
      axpy(field, aik, b.row(k), out.row(i));
    }
  return out;
}

template <Field F>
bool is_zero_matrix(const F& field, const Matrix<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!is_zero_vector(field, m.row(r))) return false;
  return true;
}

}  // namespace dihom

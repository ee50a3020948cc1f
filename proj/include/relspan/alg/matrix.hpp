#pragma once

#include "relspan/alg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace relspan::alg {

/// Matrix over an exact field.
///
/// The interface is that of a dense r x c matrix. Storage keeps only the
/// nonzero entries, sorted row-major, so iterated tensor powers of
/// group-like coalgebras stay cheap. Acts on column vectors: a map V -> W
/// is a dim(W) x dim(V) matrix.
class Matrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {}

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return Matrix(field, rows, cols); }
  static Matrix identity(Field field, std::size_t n);
  // Duplicate positions are summed; zeros are dropped.
  static Matrix from_entries(Field field, std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
  // Row-major integer literal, mostly for tests and fixtures.
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long long> values);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_identity() const;

  Scalar at(std::size_t row, std::size_t col) const;
  Matrix with_entry(std::size_t row, std::size_t col, const Scalar& value) const;

  Matrix transpose() const;
  Matrix column(std::size_t col) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  std::vector<std::vector<Scalar>> to_dense() const;

  // Index of the first column on which *this and other differ, or cols().
  std::size_t first_differing_column(const Matrix& other) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Matrix combine(const Matrix& rhs, bool subtract) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Linear map with explicit domain and codomain dimensions.
class LinMap {
 public:
  explicit LinMap(Matrix matrix) : matrix_(std::move(matrix)) {}

  std::size_t dom_dim() const noexcept { return matrix_.cols(); }
  std::size_t cod_dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  // (*this) after inner.
  LinMap after(const LinMap& inner) const;

  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  Matrix matrix_;
};

}  // namespace relspan::alg

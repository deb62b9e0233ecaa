#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "icsie/field.hpp"

namespace icsie {

/// Ascending, duplicate-free list of 0-based positions.
using IndexSet = std::vector<std::size_t>;

/// Dense vector over F_q.
class Vector {
 public:
  Vector() = default;
  Vector(FieldPtr field, std::size_t length);
  Vector(FieldPtr field, std::vector<Elem> entries);
  Vector(FieldPtr field, std::initializer_list<Elem> entries)
      : Vector(std::move(field), std::vector<Elem>(entries)) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }
  Elem at(std::size_t i) const;
  void set(std::size_t i, Elem value);
  std::span<const Elem> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return same_field(a.field_, b.field_) && a.entries_ == b.entries_;
  }
  friend bool operator<(const Vector& a, const Vector& b) { return a.entries_ < b.entries_; }

 private:
  FieldPtr field_;
  std::vector<Elem> entries_;
};

/// Dense row-major matrix over F_q. Value type: every operation below returns
/// a new matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows,
                          std::size_t cols_if_empty = 0);
  static Matrix from_rows(FieldPtr field, std::span<const Vector> rows, std::size_t cols_if_empty);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Elem value);
  std::span<const Elem> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::span<const Elem> data() const noexcept { return data_; }
  std::vector<std::vector<Elem>> to_rows() const;

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// x_D: entries of x at the positions of D, in ascending order.
Vector subvector(const Vector& x, std::span<const std::size_t> positions);
/// A_D: the rows of A listed in D, in ascending order.
Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> rows);
Matrix submatrix_cols(const Matrix& a, std::span<const std::size_t> cols);

std::size_t weight(const Vector& x);
std::size_t weight(std::span<const Elem> x);

Matrix transpose(const Matrix& a);
/// Row vector times matrix: xA.
Vector multiply(const Vector& x, const Matrix& a);
/// Matrix times column vector: A x^T, returned as a vector.
Vector multiply(const Matrix& a, const Vector& x);
Matrix multiply(const Matrix& a, const Matrix& b);

Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(Elem c, const Vector& a);
Elem dot(const Vector& a, const Vector& b);

struct EchelonForm {
  Matrix reduced;              // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination. Columns are scanned left to right; the pivot for
/// a column is the smallest remaining row index with a nonzero entry.
EchelonForm row_reduce(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Rows form a basis of {v : A v^T = 0}, one per non-pivot column in
/// ascending column order, with a 1 in that column.
Matrix null_space_basis(const Matrix& a);

bool in_row_span(const Vector& v, const Matrix& a);

/// Stack rows of b under a.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Columns of a that are not in the span of earlier columns.
IndexSet independent_columns(const Matrix& a);

}  // namespace icsie

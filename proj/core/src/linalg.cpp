#include "icsie/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace icsie {
namespace {

IndexSet normalized(std::span<const std::size_t> positions, std::size_t bound) {
  IndexSet out(positions.begin(), positions.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= bound) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(out.back()) + " out of range for length " +
                    std::to_string(bound));
  }
  return out;
}

void require_field(const FieldPtr& f) {
  if (!f) throw Error(ErrorCode::InvalidArgument, "null field");
}

}  // namespace

Vector::Vector(FieldPtr field, std::size_t length) : field_(std::move(field)), entries_(length, 0) {
  require_field(field_);
}

Vector::Vector(FieldPtr field, std::vector<Elem> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  require_field(field_);
  for (Elem e : entries_) field_->check(e);
}

Elem Vector::at(std::size_t i) const {
  if (i >= entries_.size()) throw Error(ErrorCode::IndexOutOfRange, "vector index out of range");
  return entries_[i];
}

void Vector::set(std::size_t i, Elem value) {
  if (i >= entries_.size()) throw Error(ErrorCode::IndexOutOfRange, "vector index out of range");
  field_->check(value);
  entries_[i] = value;
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_field(field_);
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  require_field(field_);
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix data has wrong size");
  }
  for (Elem e : data_) field_->check(e);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows,
                         std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::from_rows(FieldPtr field, std::span<const Vector> rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_field(field, rows[r].field());
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    std::copy(rows[r].entries().begin(), rows[r].entries().end(), m.data_.begin() + r * cols);
  }
  return m;
}

Elem Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Elem value) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  field_->check(value);
  data_[r * cols_ + c] = value;
}

Vector Matrix::row(std::size_t r) const {
  if (r >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
  return Vector(field_, std::vector<Elem>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  if (c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
  return Vector(field_, std::move(out));
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << data_[r * cols_ + c];
    }
    os << '\n';
  }
  return os.str();
}

Vector subvector(const Vector& x, std::span<const std::size_t> positions) {
  const IndexSet d = normalized(positions, x.size());
  std::vector<Elem> out;
  out.reserve(d.size());
  for (std::size_t i : d) out.push_back(x[i]);
  return Vector(x.field(), std::move(out));
}

Matrix submatrix_rows(const Matrix& a, std::span<const std::size_t> rows) {
  const IndexSet d = normalized(rows, a.rows());
  std::vector<Elem> data;
  data.reserve(d.size() * a.cols());
  for (std::size_t r : d) {
    auto row = a.row_span(r);
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(a.field(), d.size(), a.cols(), std::move(data));
}

Matrix submatrix_cols(const Matrix& a, std::span<const std::size_t> cols) {
  const IndexSet d = normalized(cols, a.cols());
  Matrix out(a.field(), a.rows(), d.size());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < d.size(); ++k) out.set(r, k, a(r, d[k]));
  }
  return out;
}

std::size_t weight(std::span<const Elem> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
}

std::size_t weight(const Vector& x) { return weight(x.entries()); }

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t.set(c, r, a(r, c));
  }
  return t;
}

Vector multiply(const Vector& x, const Matrix& a) {
  require_same_field(x.field(), a.field());
  if (x.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "xA: length mismatch");
  const Field& f = *a.field();
  std::vector<Elem> out(a.cols(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Elem xr = x[r];
    if (xr == 0) continue;
    auto row = a.row_span(r);
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] = f.add(out[c], f.mul(xr, row[c]));
  }
  return Vector(a.field(), std::move(out));
}

Vector multiply(const Matrix& a, const Vector& x) {
  require_same_field(x.field(), a.field());
  if (x.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "Ax^T: length mismatch");
  const Field& f = *a.field();
  std::vector<Elem> out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row_span(r);
    Elem acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(row[c], x[c]));
    out[r] = acc;
  }
  return Vector(a.field(), std::move(out));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "AB: inner dimension mismatch");
  const Field& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Elem acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(r, k), b(k, c)));
      out.set(r, c, acc);
    }
  }
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  require_same_field(a.field(), b.field());
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field()->add(a[i], b[i]);
  return Vector(a.field(), std::move(out));
}

Vector subtract(const Vector& a, const Vector& b) {
  require_same_field(a.field(), b.field());
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field()->sub(a[i], b[i]);
  return Vector(a.field(), std::move(out));
}

Vector scale(Elem c, const Vector& a) {
  a.field()->check(c);
  std::vector<Elem> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.field()->mul(c, a[i]);
  return Vector(a.field(), std::move(out));
}

Elem dot(const Vector& a, const Vector& b) {
  require_same_field(a.field(), b.field());
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = a.field()->add(acc, a.field()->mul(a[i], b[i]));
  return acc;
}

EchelonForm row_reduce(const Matrix& a) {
  const Field& f = *a.field();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Elem>> m = a.to_rows();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t pick = rows;
    for (std::size_t r = next; r < rows; ++r) {
      if (m[r][c] != 0) {
        pick = r;
        break;
      }
    }
    if (pick == rows) continue;
    // Shift rather than swap so the remaining rows keep their relative order.
    std::rotate(m.begin() + static_cast<std::ptrdiff_t>(next), m.begin() + static_cast<std::ptrdiff_t>(pick),
                m.begin() + static_cast<std::ptrdiff_t>(pick) + 1);
    const Elem lead_inv = f.inv(m[next][c]);
    for (std::size_t k = c; k < cols; ++k) m[next][k] = f.mul(m[next][k], lead_inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || m[r][c] == 0) continue;
      const Elem factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = f.sub(m[r][k], f.mul(factor, m[next][k]));
      }
    }
    pivots.push_back(c);
    ++next;
  }
  m.resize(pivots.size());
  return {Matrix::from_rows(a.field(), m, cols), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Matrix null_space_basis(const Matrix& a) {
  const Field& f = *a.field();
  const EchelonForm ef = row_reduce(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
      v[ef.pivots[r]] = f.neg(ef.reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(a.field(), basis, cols);
}

bool in_row_span(const Vector& v, const Matrix& a) {
  require_same_field(v.field(), a.field());
  if (v.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "span test: length mismatch");
  Matrix extra(a.field(), 1, v.size(), std::vector<Elem>(v.entries().begin(), v.entries().end()));
  return rank(vstack(a, extra)) == rank(a);
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack: column mismatch");
  std::vector<Elem> data(a.data().begin(), a.data().end());
  data.insert(data.end(), b.data().begin(), b.data().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

IndexSet independent_columns(const Matrix& a) {
  // The pivot columns of the row echelon form are exactly the columns that are
  // independent of the columns before them.
  return row_reduce(a).pivots;
}

}  // namespace icsie

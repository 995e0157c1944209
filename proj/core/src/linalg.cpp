#include "homalg/linalg.hpp"

#include <sstream>
#include <utility>

namespace homalg {

// ---------------------------------------------------------------- Vector

Vector::Vector(FieldSpec field, std::size_t size)
    : field_(field), entries_(size, Scalar::zero(field)) {}

Vector::Vector(FieldSpec field, std::vector<Scalar> entries)
    : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) {
      throw Error(ErrorKind::FieldMismatch, "vector entry outside " + field_.to_string());
    }
  }
}

Vector Vector::unit(FieldSpec field, std::size_t size, std::size_t index) {
  Vector v(field, size);
  v[index] = Scalar::one(field);
  return v;
}

Vector Vector::from_ints(FieldSpec field, std::initializer_list<long> values) {
  std::vector<Scalar> entries;
  entries.reserve(values.size());
  for (long x : values) entries.push_back(Scalar::from_int(field, x));
  return Vector(field, std::move(entries));
}

bool Vector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void Vector::check_compatible(const Vector& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::FieldMismatch, "vectors over different fields");
  }
  if (size() != other.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector sizes " + std::to_string(size()) + " and " + std::to_string(other.size()));
  }
}

Vector& Vector::operator+=(const Vector& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Vector& Vector::add_scaled(const Scalar& s, const Vector& rhs) {
  check_compatible(rhs);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rhs.entries_[i].is_zero()) entries_[i] += s * rhs.entries_[i];
  }
  return *this;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  Matrix m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (long x : row) m(r, c++) = Scalar::from_int(field, x);
    ++r;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "row over a different field");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
  if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "column over a different field");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "cannot apply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                    " matrix to vector of size " + std::to_string(v.size()));
  }
  if (!(v.field() == field_)) throw Error(ErrorKind::FieldMismatch, "vector over a different field");
  Vector out(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorKind::DimensionMismatch, "stacking matrices of different width");
  if (!(below.field_ == field_)) throw Error(ErrorKind::FieldMismatch, "stacking matrices over different fields");
  Matrix m(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "matrix product over different fields");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << row(r).to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(pivot, k), a(lead_row, k));
    }
    const Scalar inv = a(lead_row, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        if (!a(lead_row, k).is_zero()) a(r, k) -= factor * a(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  s.basis_ = Matrix(field, 0, ambient_dim);
  return s;
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  return row_space(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  Subspace s = zero(m.field(), m.cols());
  Matrix basis(m.field(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(r, c) = reduced(r, c);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "vector outside ambient space");
  Vector rem = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar coeff = rem[pivots_[i]];
    if (!coeff.is_zero()) rem.add_scaled(-coeff, basis_.row(i));
  }
  return rem;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  return row_space(basis_.stacked(other.basis_));
}

Subspace kernel_basis(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  const FieldSpec field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(field, m.cols());
    v[free] = Scalar::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(field, m.cols(), basis);
}

Subspace image_basis(const Matrix& m) { return Subspace::row_space(m.transpose()); }

std::optional<Matrix> invert(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "invert requires a square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = reduced(r, n + c);
  return inv;
}

Subspace complement(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient_dim(), false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
    if (!is_pivot[c]) basis.push_back(Vector::unit(s.field(), s.ambient_dim(), c));
  }
  return Subspace::span(s.field(), s.ambient_dim(), basis);
}

std::optional<AffineSolution> solve_affine(const Matrix& lhs, const Vector& rhs) {
  if (rhs.size() != lhs.rows()) throw Error(ErrorKind::DimensionMismatch, "rhs length differs from row count");
  const std::size_t n = lhs.cols();
  Matrix aug(lhs.field(), lhs.rows(), n + 1);
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = lhs(r, c);
    aug(r, n) = rhs[r];
  }
  auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector particular(lhs.field(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r) particular[pivots[r]] = reduced(r, n);
  return AffineSolution{std::move(particular), kernel_basis(lhs)};
}

}  // namespace homalg

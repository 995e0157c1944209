#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

/// Coordinate vector over a single field.
class Vector {
 public:
  Vector() = default;
  Vector(FieldSpec field, std::size_t size);
  Vector(FieldSpec field, std::vector<Scalar> entries);

  static Vector zero(FieldSpec field, std::size_t size) { return Vector(field, size); }
  static Vector unit(FieldSpec field, std::size_t size, std::size_t index);
  static Vector from_ints(FieldSpec field, std::initializer_list<long> values);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_zero() const;

  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  Vector& operator+=(const Vector& rhs);
  Vector& operator-=(const Vector& rhs);
  Vector& operator*=(const Scalar& s);
  /// this += s * rhs
  Vector& add_scaled(const Scalar& s, const Vector& rhs);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend bool operator==(const Vector&, const Vector&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const Vector& other) const;

  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix. Acts on column vectors: apply(v) = M v.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix zero(FieldSpec field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(FieldSpec field, std::size_t rows, std::span<const Vector> cols);
  static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  /// Rows of this followed by rows of other.
  Matrix stacked(const Matrix& below) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of K^n stored as the nonzero rows of a reduced row-echelon
/// basis. RREF is canonical, so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  static Subspace span(FieldSpec field, std::size_t ambient_dim, std::span<const Vector> vectors);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;

  /// v minus its component along the basis rows; zero iff v is in the span.
  /// Linear in v.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// s + t
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
/// nullopt when m is singular. Throws DimensionMismatch for non-square m.
std::optional<Matrix> invert(const Matrix& m);
/// Standard basis vectors at the non-pivot coordinates of s.
Subspace complement(const Subspace& s);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Full solution set of lhs x = rhs, or nullopt when rhs is not in the column space.
std::optional<AffineSolution> solve_affine(const Matrix& lhs, const Vector& rhs);

}  // namespace homalg

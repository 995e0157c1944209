#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homalg/linalg.hpp"

namespace homalg {

/// Elements are coordinate vectors in the algebra's basis.
using Element = Vector;

/// A finite-dimensional algebra given by structure constants:
/// e_i * e_j = sum_k sc(i, j, k) e_k. The product is bilinear by construction
/// and need not be associative.
class Algebra {
 public:
  Algebra() = default;
  /// Zero product. Throws Degenerate for dim == 0.
  Algebra(FieldSpec field, std::size_t dim, std::vector<std::string> basis_names = {});

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim_ + j) * dim_ + k];
  }
  void set_sc(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  /// e_i * e_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  void set_basis_product(std::size_t i, std::size_t j, const Vector& value);

  Element basis(std::size_t i) const { return Vector::unit(field_, dim_, i); }
  Element zero() const { return Vector(field_, dim_); }

  /// Empty when the basis is unnamed.
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  /// Name of e_i, falling back to "e<i+1>".
  std::string basis_name(std::size_t i) const;
  void set_basis_names(std::vector<std::string> names);

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.sc_ == b.sc_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> sc_;
  std::vector<std::string> names_;
};

/// Square matrix acting on coordinate vectors; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix matrix);

  static LinearMap identity(FieldSpec field, std::size_t n) { return LinearMap(Matrix::identity(field, n)); }
  static LinearMap zero(FieldSpec field, std::size_t n) { return LinearMap(Matrix::zero(field, n, n)); }
  static LinearMap scalar(FieldSpec field, std::size_t n, const Scalar& s);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  const FieldSpec& field() const noexcept { return m_.field(); }

  Vector operator()(const Vector& v) const { return m_.apply(v); }
  /// Image of e_j.
  Vector image_of_basis(std::size_t j) const { return m_.column(j); }
  /// (this o other)(x) = this(other(x))
  LinearMap compose(const LinearMap& other) const { return LinearMap(m_ * other.m_); }
  std::optional<LinearMap> inverse() const;
  bool is_injective() const { return rank(m_) == dim(); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix m_;
};

/// An algebra with a twisting map. Hom-associativity is not enforced here;
/// use check_hom_associative.
class HomAlgebra {
 public:
  HomAlgebra() = default;
  HomAlgebra(Algebra algebra, LinearMap alpha);

  const Algebra& algebra() const noexcept { return algebra_; }
  const LinearMap& alpha() const noexcept { return alpha_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const FieldSpec& field() const noexcept { return algebra_.field(); }

  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;

 private:
  Algebra algebra_;
  LinearMap alpha_;
};

/// Evidence that an identity fails: the basis tuple it failed on and the
/// two sides as evaluated.
struct Witness {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
  std::string description;

  std::string to_string() const;
};

struct CheckResult {
  bool passed = true;
  std::optional<Witness> witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return passed; }
};

Element multiply(const Algebra& a, const Element& x, const Element& y);
/// (x*y)*z - x*(y*z)
Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z);

/// alpha(e_i)*(e_j*e_k) == (e_i*e_j)*alpha(e_k) on every basis triple,
/// which is enough by multilinearity. Witness: first failing (i,j,k).
CheckResult check_hom_associative(const HomAlgebra& h);
CheckResult check_associative(const Algebra& a);

/// Restricts a basis-triple check to the triples it accepts. Used for
/// truncated carriers where some products leave the represented range.
using TripleFilter = std::function<bool(std::size_t, std::size_t, std::size_t)>;
CheckResult check_hom_associative(const HomAlgebra& h, const TripleFilter& in_scope);
CheckResult check_associative(const Algebra& a, const TripleFilter& in_scope);
CheckResult check_commutative(const Algebra& a);

bool is_left_unit(const Algebra& a, const Element& u);
bool is_right_unit(const Algebra& a, const Element& u);
bool is_unit(const Algebra& a, const Element& u);

/// Solution sets of the four unit systems; nullopt means no solution.
struct UnitReport {
  std::optional<Element> two_sided_unit;
  std::optional<AffineSolution> left_units;
  std::optional<AffineSolution> right_units;
  std::optional<AffineSolution> weak_left_units;   // c*x = alpha(x)
  std::optional<AffineSolution> weak_right_units;  // x*c = alpha(x)
};

UnitReport find_units(const HomAlgebra& h);
std::optional<Element> find_two_sided_unit(const Algebra& a);
std::optional<AffineSolution> find_weak_left_units(const HomAlgebra& h);
std::optional<AffineSolution> find_weak_right_units(const HomAlgebra& h);

enum class Recipe { CentralMultiplication, Yau, GeneralizedYau, ZeroTwist };

std::string_view to_string(Recipe r);
/// Accepts "central-multiplication", "yau", "generalized-yau", "zero-twist".
Recipe parse_recipe(std::string_view name);

struct RandomOptions {
  /// Yau / generalized-yau / central-multiplication: insist on bijective alpha.
  bool require_bijective = false;
  int max_attempts = 64;
};

/// Seed-deterministic generator; output always passes check_hom_associative.
/// Throws GenerationFailed after max_attempts unsuccessful tries.
HomAlgebra random_hom_algebra(FieldSpec field, std::size_t dim, Recipe recipe, std::uint64_t seed,
                              const RandomOptions& options = {});

/// Structure constants and twisting map rewritten in the basis given by the
/// columns of change (new e_i = sum_r change(r, i) old e_r).
Algebra change_basis(const Algebra& a, const Matrix& change);
HomAlgebra change_basis(const HomAlgebra& h, const Matrix& change);

}  // namespace homalg

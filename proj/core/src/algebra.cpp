#include "homalg/algebra.hpp"

#include <utility>

namespace homalg {

Algebra::Algebra(FieldSpec field, std::size_t dim, std::vector<std::string> basis_names)
    : field_(field), dim_(dim), sc_(dim * dim * dim, Scalar::zero(field)) {
  if (dim == 0) throw Error(ErrorKind::Degenerate, "algebras must have dimension >= 1");
  set_basis_names(std::move(basis_names));
}

void Algebra::set_sc(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
  if (!(value.field() == field_)) throw Error(ErrorKind::FieldMismatch, "structure constant outside " + field_.to_string());
  sc_[(i * dim_ + j) * dim_ + k] = value;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  const auto first = sc_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(field_, std::vector<Scalar>(first, first + static_cast<std::ptrdiff_t>(dim_)));
}

void Algebra::set_basis_product(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "product vector has wrong length");
  for (std::size_t k = 0; k < dim_; ++k) set_sc(i, j, k, value[k]);
}

std::string Algebra::basis_name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return "e" + std::to_string(i + 1);
}

void Algebra::set_basis_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != dim_) {
    throw Error(ErrorKind::DimensionMismatch, "basis name list must have one name per basis vector");
  }
  names_ = std::move(names);
}

LinearMap::LinearMap(Matrix matrix) : m_(std::move(matrix)) {
  if (!m_.is_square()) throw Error(ErrorKind::DimensionMismatch, "linear map matrix must be square");
}

LinearMap LinearMap::scalar(FieldSpec field, std::size_t n, const Scalar& s) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return LinearMap(std::move(m));
}

std::optional<LinearMap> LinearMap::inverse() const {
  auto inv = invert(m_);
  if (!inv) return std::nullopt;
  return LinearMap(std::move(*inv));
}

HomAlgebra::HomAlgebra(Algebra algebra, LinearMap alpha) : algebra_(std::move(algebra)), alpha_(std::move(alpha)) {
  if (alpha_.dim() != algebra_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "twisting map dimension differs from algebra dimension");
  }
  if (!(alpha_.field() == algebra_.field())) {
    throw Error(ErrorKind::FieldMismatch, "twisting map over a different field");
  }
}

std::string Witness::to_string() const {
  std::string out = description.empty() ? std::string("witness") : description;
  out += " at (";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ", ";
    out += "e" + std::to_string(indices[i] + 1);
  }
  out += "): lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
  return out;
}

Element multiply(const Algebra& a, const Element& x, const Element& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "element dimension differs from algebra");
  if (!(x.field() == a.field()) || !(y.field() == a.field())) throw Error(ErrorKind::FieldMismatch, "element over a different field");
  Element out = a.zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = a.sc(i, j, k);
        if (!c.is_zero()) out[k] += coeff * c;
      }
    }
  }
  return out;
}

Element associator(const Algebra& a, const Element& x, const Element& y, const Element& z) {
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

CheckResult check_hom_associative(const HomAlgebra& h) { return check_hom_associative(h, TripleFilter{}); }

CheckResult check_associative(const Algebra& a) { return check_associative(a, TripleFilter{}); }

CheckResult check_hom_associative(const HomAlgebra& h, const TripleFilter& in_scope) {
  const Algebra& a = h.algebra();
  const std::size_t n = a.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(h.alpha().image_of_basis(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (in_scope && !in_scope(i, j, k)) continue;
        Vector lhs = multiply(a, images[i], a.basis_product(j, k));
        Vector rhs = multiply(a, ij, images[k]);
        if (!(lhs == rhs)) {
          return CheckResult::fail({{i, j, k}, std::move(lhs), std::move(rhs), "alpha(x)*(y*z) != (x*y)*alpha(z)"});
        }
      }
    }
  return CheckResult::pass();
}

CheckResult check_associative(const Algebra& a, const TripleFilter& in_scope) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (in_scope && !in_scope(i, j, k)) continue;
        Vector lhs = multiply(a, ij, a.basis(k));
        Vector rhs = multiply(a, a.basis(i), a.basis_product(j, k));
        if (!(lhs == rhs)) {
          return CheckResult::fail({{i, j, k}, std::move(lhs), std::move(rhs), "(x*y)*z != x*(y*z)"});
        }
      }
    }
  return CheckResult::pass();
}

CheckResult check_commutative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = a.basis_product(i, j);
      Vector rhs = a.basis_product(j, i);
      if (!(lhs == rhs)) return CheckResult::fail({{i, j}, std::move(lhs), std::move(rhs), "x*y != y*x"});
    }
  return CheckResult::pass();
}

bool is_left_unit(const Algebra& a, const Element& u) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(multiply(a, u, a.basis(i)) == a.basis(i))) return false;
  }
  return true;
}

bool is_right_unit(const Algebra& a, const Element& u) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(multiply(a, a.basis(i), u) == a.basis(i))) return false;
  }
  return true;
}

bool is_unit(const Algebra& a, const Element& u) { return is_left_unit(a, u) && is_right_unit(a, u); }

namespace {

enum class Side { Left, Right };

// Rows (i, k) of the system "u * e_i = target_i" (Left) or "e_i * u = target_i"
// (Right); column m carries the coefficient of u_m.
Matrix multiplication_system(const Algebra& a, Side side) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t u = 0; u < n; ++u) m(i * n + k, u) = side == Side::Left ? a.sc(u, i, k) : a.sc(i, u, k);
  return m;
}

Vector identity_targets(const Algebra& a) {
  const std::size_t n = a.dim();
  Vector rhs(a.field(), n * n);
  for (std::size_t i = 0; i < n; ++i) rhs[i * n + i] = Scalar::one(a.field());
  return rhs;
}

Vector alpha_targets(const HomAlgebra& h) {
  const std::size_t n = h.dim();
  Vector rhs(h.field(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) rhs[i * n + k] = h.alpha().matrix()(k, i);
  return rhs;
}

Vector concat(const Vector& a, const Vector& b) {
  std::vector<Scalar> all(a.entries().begin(), a.entries().end());
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return Vector(a.field(), std::move(all));
}

}  // namespace

std::optional<Element> find_two_sided_unit(const Algebra& a) {
  const Matrix both = multiplication_system(a, Side::Left).stacked(multiplication_system(a, Side::Right));
  const Vector targets = identity_targets(a);
  auto sol = solve_affine(both, concat(targets, targets));
  if (!sol) return std::nullopt;
  // A two-sided unit is unique, so the homogeneous part must be trivial.
  if (sol->homogeneous.dim() != 0) {
    throw Error(ErrorKind::Postcondition, "two-sided unit system has a non-trivial kernel");
  }
  return std::move(sol->particular);
}

std::optional<AffineSolution> find_weak_left_units(const HomAlgebra& h) {
  return solve_affine(multiplication_system(h.algebra(), Side::Left), alpha_targets(h));
}

std::optional<AffineSolution> find_weak_right_units(const HomAlgebra& h) {
  return solve_affine(multiplication_system(h.algebra(), Side::Right), alpha_targets(h));
}

UnitReport find_units(const HomAlgebra& h) {
  const Algebra& a = h.algebra();
  UnitReport report;
  report.left_units = solve_affine(multiplication_system(a, Side::Left), identity_targets(a));
  report.right_units = solve_affine(multiplication_system(a, Side::Right), identity_targets(a));
  if (report.left_units && report.right_units) report.two_sided_unit = find_two_sided_unit(a);
  report.weak_left_units = find_weak_left_units(h);
  report.weak_right_units = find_weak_right_units(h);
  return report;
}

Algebra change_basis(const Algebra& a, const Matrix& change) {
  auto inv = invert(change);
  if (!inv) throw Error(ErrorKind::NotInvertible, "change of basis matrix is singular");
  const std::size_t n = a.dim();
  if (change.rows() != n) throw Error(ErrorKind::DimensionMismatch, "change of basis has wrong size");
  std::vector<Vector> new_basis;
  for (std::size_t i = 0; i < n; ++i) new_basis.push_back(change.column(i));
  Algebra out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set_basis_product(i, j, inv->apply(multiply(a, new_basis[i], new_basis[j])));
  return out;
}

HomAlgebra change_basis(const HomAlgebra& h, const Matrix& change) {
  auto inv = invert(change);
  if (!inv) throw Error(ErrorKind::NotInvertible, "change of basis matrix is singular");
  return HomAlgebra(change_basis(h.algebra(), change), LinearMap(*inv * h.alpha().matrix() * change));
}

std::string_view to_string(Recipe r) {
  switch (r) {
    case Recipe::CentralMultiplication: return "central-multiplication";
    case Recipe::Yau: return "yau";
    case Recipe::GeneralizedYau: return "generalized-yau";
    case Recipe::ZeroTwist: return "zero-twist";
  }
  return "unknown";
}

Recipe parse_recipe(std::string_view name) {
  for (Recipe r : {Recipe::CentralMultiplication, Recipe::Yau, Recipe::GeneralizedYau, Recipe::ZeroTwist}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown recipe \"" + std::string(name) + "\"");
}

}  // namespace homalg

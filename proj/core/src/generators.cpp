#include <random>
#include <utility>

#include "homalg/algebra.hpp"
#include "homalg/twisting.hpp"

namespace homalg {

namespace {

class Source {
 public:
  Source(FieldSpec field, std::uint64_t seed) : field_(field), rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return (rng_() & 1) != 0; }

  // Uniform residue over GF(p), an integer in [-3, 3] over the rationals.
  Scalar scalar() {
    if (field_.is_prime_field()) return Scalar::from_int(field_, static_cast<long>(rng_() % field_.characteristic()));
    return Scalar::from_int(field_, static_cast<long>(rng_() % 7) - 3);
  }
  Scalar nonzero() {
    for (;;) {
      Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }
  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(field_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar();
    return m;
  }
  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (rank(m) == n) return m;
    }
  }

  const FieldSpec& field() const { return field_; }

 private:
  FieldSpec field_;
  std::mt19937_64 rng_;
};

// A unital associative block with a unit-preserving endomorphism and a central
// element.
struct Block {
  Algebra algebra;
  Matrix endo;
  Vector central;
};

// K[t]/(t^m), basis 1, t, ..., t^(m-1); t -> lambda t + sum c_k t^k.
Block truncated_polynomial(Source& src, std::size_t m, bool bijective) {
  const FieldSpec f = src.field();
  Algebra a(f, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j) a.set_sc(i, j, i + j, Scalar::one(f));
  Vector image_t(f, m);
  if (m > 1) {
    image_t[1] = bijective ? src.nonzero() : src.scalar();
    for (std::size_t k = 2; k < m; ++k) image_t[k] = src.scalar();
  }
  Matrix endo(f, m, m);
  Vector power = Vector::unit(f, m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    endo.set_column(j, power);
    power = multiply(a, power, image_t);
  }
  Vector central(f, m);
  for (std::size_t k = 0; k < m; ++k) central[k] = src.scalar();
  if (bijective) central[0] = src.nonzero();
  return {std::move(a), std::move(endo), std::move(central)};
}

// K^m componentwise; alpha(x)_j = x_sigma(j).
Block componentwise(Source& src, std::size_t m, bool bijective) {
  const FieldSpec f = src.field();
  Algebra a(f, m);
  for (std::size_t i = 0; i < m; ++i) a.set_sc(i, i, i, Scalar::one(f));
  std::vector<std::size_t> sigma(m);
  for (std::size_t j = 0; j < m; ++j) sigma[j] = j;
  if (bijective) {
    for (std::size_t j = m; j > 1; --j) std::swap(sigma[j - 1], sigma[src.below(j)]);
  } else {
    for (std::size_t j = 0; j < m; ++j) sigma[j] = src.below(m);
  }
  Matrix endo(f, m, m);
  for (std::size_t j = 0; j < m; ++j) endo(j, sigma[j]) = Scalar::one(f);
  Vector central(f, m);
  for (std::size_t k = 0; k < m; ++k) central[k] = bijective ? src.nonzero() : src.scalar();
  return {std::move(a), std::move(endo), std::move(central)};
}

// 2x2 matrices (basis E11, E12, E21, E22) or the upper-triangular ones (E11,
// E12, E22), with conjugation by an invertible matrix of the same shape.
Block matrix_algebra(Source& src, bool upper) {
  const FieldSpec f = src.field();
  std::vector<std::pair<std::size_t, std::size_t>> cells = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  if (upper) cells = {{0, 0}, {0, 1}, {1, 1}};
  const std::size_t m = cells.size();
  auto index_of = [&](std::size_t r, std::size_t c) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < m; ++i)
      if (cells[i] == std::pair{r, c}) return i;
    return std::nullopt;
  };
  Algebra a(f, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (cells[i].second == cells[j].first) a.set_sc(i, j, *index_of(cells[i].first, cells[j].second), Scalar::one(f));

  Matrix q(f, 2, 2);
  for (;;) {
    q = src.matrix(2, 2);
    if (upper) q(1, 0) = Scalar::zero(f);
    if (rank(q) == 2) break;
  }
  const Matrix qi = *invert(q);
  Matrix endo(f, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Matrix unit(f, 2, 2);
    unit(cells[j].first, cells[j].second) = Scalar::one(f);
    const Matrix image = q * unit * qi;
    for (std::size_t i = 0; i < m; ++i) endo(i, j) = image(cells[i].first, cells[i].second);
  }
  Vector central(f, m);
  const Scalar s = src.nonzero();
  central[*index_of(0, 0)] = s;
  central[*index_of(1, 1)] = s;
  return {std::move(a), std::move(endo), std::move(central)};
}

Block direct_sum(const Block& x, const Block& y) {
  const FieldSpec f = x.algebra.field();
  const std::size_t m = x.algebra.dim();
  const std::size_t n = m + y.algebra.dim();
  Algebra a(f, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) a.set_sc(i, j, k, x.algebra.sc(i, j, k));
  for (std::size_t i = m; i < n; ++i)
    for (std::size_t j = m; j < n; ++j)
      for (std::size_t k = m; k < n; ++k) a.set_sc(i, j, k, y.algebra.sc(i - m, j - m, k - m));
  Matrix endo(f, n, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) endo(r, c) = x.endo(r, c);
  for (std::size_t r = m; r < n; ++r)
    for (std::size_t c = m; c < n; ++c) endo(r, c) = y.endo(r - m, c - m);
  Vector central(f, n);
  for (std::size_t k = 0; k < m; ++k) central[k] = x.central[k];
  for (std::size_t k = m; k < n; ++k) central[k] = y.central[k - m];
  return {std::move(a), std::move(endo), std::move(central)};
}

Block single_block(Source& src, std::size_t dim, bool bijective) {
  if (dim == 4 && src.below(3) == 0) return matrix_algebra(src, false);
  if (dim == 3 && src.below(3) == 0) return matrix_algebra(src, true);
  return src.coin() ? truncated_polynomial(src, dim, bijective) : componentwise(src, dim, bijective);
}

Block unital_associative(Source& src, std::size_t dim, bool bijective) {
  if (dim >= 2 && src.below(3) == 0) {
    const std::size_t first = 1 + src.below(dim - 1);
    return direct_sum(single_block(src, first, bijective), single_block(src, dim - first, bijective));
  }
  return single_block(src, dim, bijective);
}

LinearMap left_multiplication(const Algebra& a, const Vector& x) {
  Matrix m(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.set_column(i, multiply(a, x, a.basis(i)));
  return LinearMap(std::move(m));
}

// B = A x U with A commutative (dim m), (a1,u1)(a2,u2) = (a1 a2, e(a1)u2 +
// e(a2)u1 + u1 u2) for the augmentation e of A and a random product on U;
// alpha is multiplication by (s, 0) with e(s) = 0 whenever U is nonzero.
HomAlgebra central_multiplication(Source& src, std::size_t dim, bool bijective) {
  const FieldSpec f = src.field();
  // A one-dimensional base next to a nonzero U forces s = 0, so start at 2.
  const std::size_t m = bijective || dim == 1 ? dim : 2 + src.below(dim - 1);
  const bool poly = src.coin();
  Block base = poly ? truncated_polynomial(src, m, true) : componentwise(src, m, true);
  // Augmentation: constant term, or the first coordinate.
  auto augmentation = [&](std::size_t i) { return i == 0 ? Scalar::one(f) : Scalar::zero(f); };

  Algebra b(f, dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) b.set_sc(i, j, k, base.algebra.sc(i, j, k));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t u = m; u < dim; ++u) {
      b.set_sc(i, u, u, augmentation(i));
      b.set_sc(u, i, u, augmentation(i));
    }
  for (std::size_t u = m; u < dim; ++u)
    for (std::size_t v = m; v < dim; ++v)
      for (std::size_t w = m; w < dim; ++w) b.set_sc(u, v, w, src.scalar());

  Vector s(f, dim);
  for (std::size_t k = 0; k < m; ++k) s[k] = src.scalar();
  if (dim > m) s[0] = Scalar::zero(f);
  if (bijective) {
    if (poly) {
      s[0] = src.nonzero();
    } else {
      for (std::size_t k = 0; k < m; ++k) s[k] = src.nonzero();
    }
  }
  return HomAlgebra(b, left_multiplication(b, s));
}

HomAlgebra yau(Source& src, std::size_t dim, bool bijective) {
  Block base = unital_associative(src, dim, bijective);
  return yau_twist(base.algebra, LinearMap(base.endo));
}

// Either alpha = (central z) * phi(x) over a unital associative algebra, or
// x.y = f(x) y (left unital only) with f(alpha(x)) = lambda f(x).
HomAlgebra generalized_yau(Source& src, std::size_t dim, bool bijective) {
  const FieldSpec f = src.field();
  if (src.coin()) {
    Block base = unital_associative(src, dim, bijective);
    const LinearMap alpha = left_multiplication(base.algebra, base.central).compose(LinearMap(base.endo));
    return generalized_twist(base.algebra, alpha);
  }
  Algebra a(f, dim);
  for (std::size_t j = 0; j < dim; ++j) a.set_sc(0, j, j, Scalar::one(f));
  Matrix m = src.matrix(dim, dim);
  for (std::size_t c = 1; c < dim; ++c) m(0, c) = Scalar::zero(f);
  m(0, 0) = bijective ? src.nonzero() : src.scalar();
  if (bijective && dim > 1) {
    Matrix tail = src.invertible(dim - 1);
    for (std::size_t r = 1; r < dim; ++r)
      for (std::size_t c = 1; c < dim; ++c) m(r, c) = tail(r - 1, c - 1);
  }
  return generalized_twist(a, LinearMap(std::move(m)));
}

HomAlgebra zero_twist(Source& src, std::size_t dim) {
  const FieldSpec f = src.field();
  Algebra a(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) a.set_sc(i, j, k, src.scalar());
  return HomAlgebra(std::move(a), LinearMap::zero(f, dim));
}

}  // namespace

HomAlgebra random_hom_algebra(FieldSpec field, std::size_t dim, Recipe recipe, std::uint64_t seed,
                              const RandomOptions& options) {
  if (dim == 0) throw Error(ErrorKind::Degenerate, "algebras must have dimension >= 1");
  Source src(field, seed);
  std::string last_failure = "no attempt made";
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    try {
      HomAlgebra h;
      switch (recipe) {
        case Recipe::CentralMultiplication: h = central_multiplication(src, dim, options.require_bijective); break;
        case Recipe::Yau: h = yau(src, dim, options.require_bijective); break;
        case Recipe::GeneralizedYau: h = generalized_yau(src, dim, options.require_bijective); break;
        case Recipe::ZeroTwist: h = zero_twist(src, dim); break;
      }
      h = change_basis(h, src.invertible(dim));
      if (auto r = check_hom_associative(h); !r) {
        last_failure = "output not hom-associative: " + r.witness->to_string();
        continue;
      }
      if (options.require_bijective && !h.alpha().is_injective()) {
        last_failure = "twisting map not bijective";
        continue;
      }
      return h;
    } catch (const Error& e) {
      last_failure = e.what();
    }
  }
  throw Error(ErrorKind::GenerationFailed, std::string(to_string(recipe)) + " generation failed after " +
                                               std::to_string(options.max_attempts) + " attempts: " + last_failure);
}

}  // namespace homalg

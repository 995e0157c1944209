#include <doctest.h>

#include "homalg/algebra.hpp"
#include "homalg/fixtures.hpp"
#include "support/oracles.hpp"

using namespace homalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

HomAlgebra non_adjoint() { return load_fixture("ex-non-adjoint").file.hom_algebra(); }

// Unital algebra 1, u, v with uu = v, uv = u.
Algebra uv_algebra() { return load_fixture("unital-nonassoc-3d").file.algebra; }

}  // namespace

TEST_CASE("dimension zero is rejected") { CHECK_THROWS_AS(Algebra(Q, 0), Error); }

TEST_CASE("multiply on the non-adjoint example") {
  const Algebra a = non_adjoint().algebra();
  CHECK(multiply(a, Vector::from_ints(Q, {1, 0}), Vector::from_ints(Q, {0, 1})).is_zero());
  CHECK(multiply(a, Vector::from_ints(Q, {1, 1}), Vector::from_ints(Q, {1, 0})) == Vector::from_ints(Q, {0, 1}));
  CHECK(multiply(a, a.zero(), Vector::from_ints(Q, {3, 4})).is_zero());
  CHECK_THROWS_AS(multiply(a, Vector(Q, 3), Vector(Q, 2)), Error);
}

TEST_CASE("associator") {
  const Algebra a = uv_algebra();
  const Vector u = a.basis(1);
  CHECK(associator(a, u, u, u) == Vector::from_ints(Q, {0, -1, 0}));
  CHECK(associator(a, a.zero(), u, u).is_zero());
  const Algebra c = load_fixture("gf2-componentwise").file.algebra;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(associator(c, c.basis(i), c.basis(j), c.basis(k)).is_zero());
}

TEST_CASE("uv algebra fails associativity only at witnesses that really fail") {
  const Algebra a = uv_algebra();
  const CheckResult r = check_associative(a);
  REQUIRE_FALSE(r.passed);
  CHECK(r.witness->indices == std::vector<std::size_t>{1, 1, 1});
  // Brute force over basis triples: the reported one is the first failing.
  bool found = false;
  for (std::size_t i = 0; i < 3 && !found; ++i)
    for (std::size_t j = 0; j < 3 && !found; ++j)
      for (std::size_t k = 0; k < 3 && !found; ++k) {
        const Vector l = oracle::product(a, oracle::product(a, a.basis(i), a.basis(j)), a.basis(k));
        const Vector rr = oracle::product(a, a.basis(i), oracle::product(a, a.basis(j), a.basis(k)));
        if (l != rr) {
          found = true;
          CHECK(std::vector<std::size_t>{i, j, k} == r.witness->indices);
        }
      }
}

TEST_CASE("hom-associativity examples") {
  CHECK(check_hom_associative(non_adjoint()).passed);
  const Algebra a = uv_algebra();
  CHECK(check_hom_associative(HomAlgebra(a, LinearMap::zero(Q, 3))).passed);

  // Upper-triangular 2x2 over GF(2), basis E11, E12, E22, alpha = left
  // multiplication by E11.
  const FieldSpec f2 = FieldSpec::prime(2);
  Algebra t(f2, 3, {"E11", "E12", "E22"});
  const Scalar one = Scalar::one(f2);
  t.set_sc(0, 0, 0, one);
  t.set_sc(0, 1, 1, one);
  t.set_sc(1, 2, 1, one);
  t.set_sc(2, 2, 2, one);
  Matrix left(f2, 3, 3);
  for (std::size_t j = 0; j < 3; ++j) left.set_column(j, t.basis_product(0, j));
  const HomAlgebra h(t, LinearMap(left));
  const CheckResult r = check_hom_associative(h);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->lhs != r.witness->rhs);
  CHECK_FALSE(oracle::hom_associative_all_elements(h));
}

TEST_CASE("commutativity and associativity of the non-adjoint example") {
  const Algebra a = non_adjoint().algebra();
  CHECK(check_associative(a).passed);
  CHECK(check_commutative(a).passed);
  CHECK_FALSE(check_commutative(uv_algebra()).passed);
}

TEST_CASE("find_units") {
  const UnitReport r = find_units(non_adjoint());
  CHECK_FALSE(r.two_sided_unit);
  CHECK_FALSE(r.weak_left_units);

  const HomAlgebra dual = load_fixture("dual-numbers-q").file.hom_algebra();
  const UnitReport d = find_units(dual);
  REQUIRE(d.two_sided_unit);
  CHECK(*d.two_sided_unit == Vector::from_ints(Q, {1, 0}));
  REQUIRE(d.weak_left_units);
  CHECK(d.weak_left_units->particular == Vector::from_ints(Q, {1, 0}));
  CHECK(d.weak_left_units->homogeneous.dim() == 0);
  REQUIRE(d.weak_right_units);
  CHECK(d.weak_right_units->homogeneous.dim() == 0);

  CHECK(find_two_sided_unit(uv_algebra()) == Vector::from_ints(Q, {1, 0, 0}));
}

TEST_CASE("random_hom_algebra recipes") {
  const FieldSpec f5 = FieldSpec::prime(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const HomAlgebra h = random_hom_algebra(f5, 3, Recipe::CentralMultiplication, seed);
    CHECK(check_hom_associative(h).passed);
    CHECK(find_two_sided_unit(h.algebra()).has_value());
    CHECK(h == random_hom_algebra(f5, 3, Recipe::CentralMultiplication, seed));
  }
  const HomAlgebra z = random_hom_algebra(Q, 2, Recipe::ZeroTwist, 7);
  CHECK(z.alpha().matrix().is_zero());
  CHECK(check_hom_associative(z).passed);

  // GF(3), dim 1: the only unital algebra is GF(3) and the only
  // unit-preserving endomorphism is the identity.
  const FieldSpec f3 = FieldSpec::prime(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const HomAlgebra y = random_hom_algebra(f3, 1, Recipe::Yau, seed);
    CHECK(y.alpha() == LinearMap::identity(f3, 1));
    CHECK(find_two_sided_unit(y.algebra()).has_value());
  }
  int endomorphisms = 0;
  for (long v = 0; v < 3; ++v) {
    // alpha(1) = v must equal 1 and alpha(1*1) = alpha(1)^2.
    if (v == 1 && (v * v) % 3 == v) ++endomorphisms;
  }
  CHECK(endomorphisms == 1);

  CHECK(parse_recipe("generalized-yau") == Recipe::GeneralizedYau);
  CHECK_THROWS_AS(parse_recipe("nope"), Error);
}

TEST_CASE("change_basis preserves hom-associativity") {
  oracle::Gen g(11);
  const FieldSpec f7 = FieldSpec::prime(7);
  const HomAlgebra h = random_hom_algebra(f7, 3, Recipe::Yau, 3);
  const Matrix p = g.invertible(f7, 3);
  const HomAlgebra moved = change_basis(h, p);
  CHECK(check_hom_associative(moved).passed);
  CHECK(change_basis(moved, *invert(p)) == h);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "homalg/fixtures.hpp"
#include "homalg/twisting.hpp"
#include "support/oracles.hpp"

using namespace homalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Algebra dual_numbers() { return load_fixture("dual-numbers-q").file.algebra; }

// 1 -> 1, t -> 2t
LinearMap doubling() { return LinearMap(Matrix::from_ints(Q, {{1, 0}, {0, 2}})); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

std::string key(const Vector& v) { return v.to_string(); }

}  // namespace

TEST_CASE("yau twist") {
  const Algebra dual = dual_numbers();
  CHECK(yau_twist(dual, LinearMap::identity(Q, 2)).algebra() == dual);

  const HomAlgebra h = yau_twist(dual, doubling());
  CHECK(check_hom_associative(h).passed);
  CHECK(h.alpha().is_injective());
  const UnitReport u = find_units(h);
  REQUIRE(u.weak_left_units);
  REQUIRE(u.weak_right_units);
  CHECK(u.weak_left_units->particular == Vector::from_ints(Q, {1, 0}));

  const Algebra c = load_fixture("gf2-componentwise").file.algebra;
  const FieldSpec f2 = c.field();
  const HomAlgebra swapped = yau_twist(c, LinearMap(Matrix::from_ints(f2, {{0, 1}, {1, 0}})));
  CHECK(check_hom_associative(swapped).passed);
  CHECK(oracle::hom_associative_all_elements(swapped));
  const auto wl = find_weak_left_units(swapped);
  REQUIRE(wl);
  CHECK((wl->particular == Vector::from_ints(f2, {1, 1}) || wl->homogeneous.contains(Vector::from_ints(f2, {1, 1}) - wl->particular)));

  // t -> t + 1 is not multiplicative: alpha(t t) = 0 but alpha(t)^2 = 1 + 2t.
  CHECK(kind_of([&] { (void)yau_twist(dual, LinearMap(Matrix::from_ints(Q, {{1, 1}, {0, 1}}))); }) ==
        ErrorKind::NotEndomorphism);
  CHECK(kind_of([&] { (void)yau_twist(load_fixture("unital-nonassoc-3d").file.algebra, LinearMap::identity(Q, 3)); }) ==
        ErrorKind::NotAssociative);
  CHECK(kind_of([&] { (void)yau_twist(load_fixture("ex-non-adjoint").file.algebra, LinearMap::identity(Q, 2)); }) ==
        ErrorKind::NotUnital);
}

TEST_CASE("generalized twist") {
  const FieldSpec f3 = FieldSpec::prime(3);
  Algebra k(f3, 1);
  k.set_sc(0, 0, 0, Scalar::one(f3));
  const LinearMap two = LinearMap::scalar(f3, 1, Scalar::from_int(f3, 2));
  const HomAlgebra h = generalized_twist(k, two);
  CHECK(h.algebra().sc(0, 0, 0) == Scalar::from_int(f3, 2));
  const auto wl = find_weak_left_units(h);
  REQUIRE(wl);
  CHECK(wl->particular == Vector::from_ints(f3, {1}));

  const Algebra uv = load_fixture("unital-nonassoc-3d").file.algebra;
  const HomAlgebra z = generalized_twist(uv, LinearMap::zero(Q, 3));
  CHECK(z.algebra() == Algebra(Q, 3));
  CHECK(check_hom_associative(z).passed);

  CHECK(generalized_twist(dual_numbers(), doubling()) == yau_twist(dual_numbers(), doubling()));

  // alpha = projection onto 1 along t in the uv algebra breaks the condition.
  const LinearMap bad(Matrix::from_ints(Q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}));
  if (!check_twist_condition(uv, bad).passed) {
    CHECK(kind_of([&] { (void)generalized_twist(uv, bad); }) == ErrorKind::ConditionFails);
  }
}

TEST_CASE("detwist") {
  const Algebra dual = dual_numbers();
  const HomAlgebra h = yau_twist(dual, doubling());
  const DetwistResult r = detwist(h);
  CHECK(r.detwisted == dual);
  CHECK(r.left_unit == Vector::from_ints(Q, {1, 0}));

  const DetwistResult id = detwist(HomAlgebra(dual, LinearMap::identity(Q, 2)));
  CHECK(id.detwisted == dual);

  const FieldSpec f3 = FieldSpec::prime(3);
  Algebra k(f3, 1);
  k.set_sc(0, 0, 0, Scalar::from_int(f3, 2));
  const DetwistResult g = detwist(HomAlgebra(k, LinearMap::scalar(f3, 1, Scalar::from_int(f3, 2))));
  CHECK(g.detwisted.sc(0, 0, 0).is_one());
  CHECK(g.left_unit == Vector::from_ints(f3, {1}));
  CHECK(g.beta.matrix()(0, 0) == Scalar::from_int(f3, 2));

  CHECK(kind_of([&] { (void)detwist(load_fixture("ex-non-adjoint").file.hom_algebra()); }) == ErrorKind::NoWeakLeftUnit);
  CHECK(kind_of([&] { (void)detwist(HomAlgebra(dual, LinearMap::zero(Q, 2))); }) ==
        ErrorKind::NotBijective);
  const HomAlgebra not_hom(load_fixture("unital-nonassoc-3d").file.algebra, LinearMap::identity(Q, 3));
  CHECK(kind_of([&] { (void)detwist(not_hom); }) == ErrorKind::NotHomAssociative);
}

TEST_CASE("weak-unit identities") {
  const HomAlgebra h = yau_twist(dual_numbers(), doubling());
  const auto reports = verify_weak_unit_identities(h);
  CHECK(reports.size() == weak_unit_identity_ids().size());
  for (const auto& r : reports) CHECK(r.status == IdentityStatus::Pass);

  const HomAlgebra na = load_fixture("ex-non-adjoint").file.hom_algebra();
  CHECK_THROWS_AS(verify_weak_unit_identities(na), Error);
  const auto diag = verify_weak_unit_identities(na, CheckMode::Diagnostic);
  for (const auto& r : diag) {
    if (r.id == "inverse-shift") {
      CHECK(r.status != IdentityStatus::Skipped);
    } else {
      CHECK(r.status == IdentityStatus::Skipped);
    }
  }
}

TEST_CASE("enumerate twists on componentwise GF(2)^2 against the 16-map brute force") {
  const auto fx = load_fixture("gf2-componentwise");
  const Algebra& a = fx.file.algebra;
  const TwistCorrespondence tc = enumerate_twists(a, *fx.file.unit);
  CHECK(tc.ac_elements.size() == 4);

  std::set<std::string> brute;
  for (std::uint64_t i = 0; i < 16; ++i) {
    const LinearMap m(oracle::matrix_from_index(a.field(), 2, i));
    if (oracle::hom_associative_all_elements(HomAlgebra(a, m))) brute.insert(m.matrix().to_string());
  }
  std::set<std::string> found;
  for (const auto& m : tc.twist_maps) found.insert(m.matrix().to_string());
  CHECK(found == brute);
}

TEST_CASE("enumerate twists on 2x2 matrices over GF(2) against the 2^16 brute force") {
  const auto fx = load_fixture("mat2-gf2");
  const Algebra& a = fx.file.algebra;
  const TwistCorrespondence tc = enumerate_twists(a, *fx.file.unit);
  REQUIRE(tc.ac_elements.size() == 2);
  CHECK(tc.ac_elements[0].is_zero());
  CHECK(tc.ac_elements[1] == *fx.file.unit);

  std::set<std::string> brute;
  for (std::uint64_t i = 0; i < (1u << 16); ++i) {
    const LinearMap m(oracle::matrix_from_index(a.field(), 4, i));
    if (check_hom_associative(HomAlgebra(a, m)).passed) brute.insert(m.matrix().to_string());
  }
  std::set<std::string> found;
  for (const auto& m : tc.twist_maps) found.insert(m.matrix().to_string());
  CHECK(found == brute);
  CHECK(found.size() == 2);
}

TEST_CASE("twist correspondence laws") {
  const auto fx = load_fixture("gf2-componentwise");
  const Algebra& a = fx.file.algebra;
  const Element one = *fx.file.unit;
  const TwistCorrespondence tc = enumerate_twists(a, one);
  std::set<std::string> elements;
  for (const auto& e : tc.ac_elements) elements.insert(key(e));
  for (std::size_t i = 0; i < tc.ac_elements.size(); ++i) {
    CHECK(tc.twist_maps[i](one) == tc.ac_elements[i]);  // Phi(Psi(a)) = a
    for (std::size_t j = 0; j < a.dim(); ++j) {         // Psi(Phi(alpha)) = alpha
      CHECK(tc.twist_maps[i].image_of_basis(j) == multiply(a, tc.ac_elements[i], a.basis(j)));
    }
    for (std::size_t j = 0; j < tc.ac_elements.size(); ++j) {
      const Element composed = tc.twist_maps[i].compose(tc.twist_maps[j])(one);
      CHECK(composed == multiply(a, tc.ac_elements[i], tc.ac_elements[j]));
      CHECK(elements.count(key(composed)) == 1);
    }
  }
}

TEST_CASE("enumerate twists over Q checks supplied candidates") {
  const Algebra dual = dual_numbers();
  EnumerateOptions opts;
  opts.candidates = {Vector::from_ints(Q, {3, 0}), Vector::from_ints(Q, {1, 5}), Vector::from_ints(Q, {0, 0})};
  const TwistCorrespondence tc = enumerate_twists(dual, Vector::from_ints(Q, {1, 0}), opts);
  // Commutative associative unital: every candidate qualifies.
  CHECK(tc.ac_elements.size() == 3);

  const auto uv = load_fixture("unital-nonassoc-3d");
  EnumerateOptions o2;
  // u is not in the nucleus, so even 2*1 fails: (2*1)u = 2u must be in it.
  o2.candidates = {Vector::from_ints(Q, {0, 1, 0}), Vector::from_ints(Q, {2, 0, 0}), Vector::from_ints(Q, {0, 0, 0})};
  const TwistCorrespondence t2 = enumerate_twists(uv.file.algebra, *uv.file.unit, o2);
  REQUIRE(t2.ac_elements.size() == 1);
  CHECK(t2.ac_elements[0].is_zero());
}

TEST_CASE("enumerate twists budget and unit errors") {
  const auto fx = load_fixture("mat2-gf2");
  EnumerateOptions tight;
  tight.budget = 1;
  CHECK(kind_of([&] { (void)enumerate_twists(fx.file.algebra, *fx.file.unit, tight); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([&] { (void)enumerate_twists(fx.file.algebra, Vector::from_ints(fx.file.algebra.field(), {1, 0, 0, 0})); }) ==
        ErrorKind::NotUnital);
}

TEST_CASE("unitalization") {
  Algebra zero(Q, 1);
  const Algebra u0 = unitalize_associative(zero);
  CHECK(u0.dim() == 2);
  CHECK(u0 == dual_numbers());

  const Algebra a = load_fixture("ex-non-adjoint").file.algebra;
  const Algebra u = unitalize_associative(a);
  CHECK(u.dim() == 3);
  CHECK(check_associative(u).passed);
  CHECK(find_two_sided_unit(u) == Vector::from_ints(Q, {1, 0, 0}));
  const Matrix emb = unitalization_embedding(a);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(multiply(u, emb.apply(a.basis(i)), emb.apply(a.basis(j))) == emb.apply(multiply(a, a.basis(i), a.basis(j))));

  CHECK(kind_of([&] { (void)unitalize_associative(load_fixture("unital-nonassoc-3d").file.algebra); }) ==
        ErrorKind::NotAssociative);
}

TEST_CASE("weak embedding obstruction") {
  const HomAlgebra na = load_fixture("ex-non-adjoint").file.hom_algebra();
  const auto w = weak_embedding_obstruction(na);
  REQUIRE(w);
  CHECK(w->x == Vector::from_ints(Q, {1, 0}));
  CHECK(w->y == Vector::from_ints(Q, {0, 1}));
  CHECK(w->twisted_product == Vector::from_ints(Q, {0, 1}));
  CHECK(multiply(na.algebra(), w->x, w->y).is_zero());

  const Algebra uv = load_fixture("unital-nonassoc-3d").file.algebra;
  CHECK_FALSE(weak_embedding_obstruction(HomAlgebra(uv, LinearMap::zero(Q, 3))));
  CHECK_FALSE(weak_embedding_obstruction(yau_twist(dual_numbers(), doubling())));
}

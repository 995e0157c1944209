#include <doctest.h>

#include "homalg/analysis.hpp"
#include "homalg/search.hpp"
#include "homalg/twisting.hpp"
#include "support/oracles.hpp"

using namespace homalg;
using oracle::Gen;

namespace {

constexpr int kTrials = 200;

const FieldSpec Q = FieldSpec::rationals();

Recipe any_recipe(Gen& g) {
  static const Recipe all[] = {Recipe::CentralMultiplication, Recipe::Yau, Recipe::GeneralizedYau, Recipe::ZeroTwist};
  return all[g.below(4)];
}

FieldSpec small_field(Gen& g) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  const std::size_t pick = g.below(5);
  return pick == 4 ? Q : FieldSpec::prime(primes[pick]);
}

}  // namespace

TEST_CASE("linalg properties") {
  Gen g(101);
  for (int t = 0; t < kTrials; ++t) {
    const FieldSpec f = g.field();
    const std::size_t rows = 1 + g.below(5), cols = 1 + g.below(5);
    const Matrix m = g.matrix(f, rows, cols);
    CAPTURE(m.to_string());

    CHECK(kernel_basis(m).dim() + image_basis(m).dim() == cols);

    const RrefResult r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    if (f.is_rationals()) {
      const auto o = oracle::rref_q(oracle::to_grid(m));
      CHECK(o.pivots == r.pivots);
      CHECK(o.reduced == oracle::to_grid(r.reduced));
    } else {
      const auto o = oracle::rref_p(oracle::to_pgrid(m), f.characteristic());
      CHECK(o.pivots == r.pivots);
      CHECK(o.reduced == oracle::to_pgrid(r.reduced));
      if (f.characteristic() <= 5 && cols <= 4) {
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < kernel_basis(m).dim(); ++i) expect *= f.characteristic();
        CHECK(oracle::count_kernel(m) == expect);
      }
    }
    for (const Vector& v : kernel_basis(m).basis_vectors()) CHECK(m.apply(v).is_zero());

    const Subspace s = Subspace::row_space(m);
    const Subspace c = complement(s);
    CHECK(s.dim() + c.dim() == cols);
    CHECK(rank(s.basis().stacked(c.basis())) == cols);

    if (rows == cols) {
      if (const auto inv = invert(m)) {
        CHECK(m * *inv == Matrix::identity(f, rows));
        CHECK(*inv * m == Matrix::identity(f, rows));
      } else {
        CHECK(rank(m) < rows);
      }
    }

    const Vector rhs = g.vector(f, rows);
    if (const auto sol = solve_affine(m, rhs)) {
      CHECK(m.apply(sol->particular) == rhs);
      for (const Vector& h : sol->homogeneous.basis_vectors()) CHECK(m.apply(h).is_zero());
    } else {
      CHECK(rank(m.transpose().stacked(Matrix::from_rows(f, rows, std::span<const Vector>(&rhs, 1)))) > rank(m));
    }
  }
}

TEST_CASE("scalar arithmetic is exact") {
  Gen g(7);
  for (int t = 0; t < kTrials; ++t) {
    const FieldSpec f = g.field();
    const Scalar a = g.scalar(f), b = g.nonzero(f);
    CHECK(a + b - b == a);
    CHECK(a * b / b == a);
    CHECK(Scalar::parse(f, a.to_string()) == a);
  }
}

TEST_CASE("multilinearity reduction on random element triples") {
  Gen g(202);
  for (int algebra = 0; algebra < 10; ++algebra) {
    const FieldSpec f = small_field(g);
    const HomAlgebra h = random_hom_algebra(f, 1 + g.below(4), any_recipe(g), g.seed());
    REQUIRE(check_hom_associative(h).passed);
    for (int t = 0; t < kTrials / 10; ++t) {
      const Vector x = g.vector(f, h.dim()), y = g.vector(f, h.dim()), z = g.vector(f, h.dim());
      const Algebra& a = h.algebra();
      CHECK(multiply(a, h.alpha()(x), multiply(a, y, z)) == multiply(a, multiply(a, x, y), h.alpha()(z)));
      CHECK(multiply(a, x, y) == oracle::product(a, x, y));
    }
  }
}

TEST_CASE("unit solutions") {
  Gen g(303);
  for (int t = 0; t < kTrials; ++t) {
    const FieldSpec f = small_field(g);
    const std::size_t n = 1 + g.below(4);
    const HomAlgebra h = random_hom_algebra(f, n, any_recipe(g), g.seed());
    CHECK(check_hom_associative(h).passed);
    const UnitReport u = find_units(h);
    if (u.two_sided_unit) {
      CHECK(is_unit(h.algebra(), *u.two_sided_unit));
      REQUIRE(u.left_units);
      REQUIRE(u.right_units);
      CHECK(u.left_units->homogeneous.dim() == 0);
      CHECK(u.right_units->homogeneous.dim() == 0);
    }
    // Weak left and right units coincide once alpha is injective.
    if (h.alpha().is_injective() && u.weak_left_units && u.weak_right_units) {
      CHECK(u.weak_left_units->homogeneous.dim() == 0);
      CHECK(u.weak_right_units->homogeneous.dim() == 0);
      CHECK(u.weak_left_units->particular == u.weak_right_units->particular);
    }
  }
}

TEST_CASE("structure of unital hom-associative algebras") {
  Gen g(404);
  for (int t = 0; t < kTrials; ++t) {
    const FieldSpec f = small_field(g);
    const std::size_t n = 1 + g.below(5);
    const HomAlgebra h = random_hom_algebra(f, n, Recipe::CentralMultiplication, g.seed());
    const Algebra& a = h.algebra();
    const auto one = find_two_sided_unit(a);
    REQUIRE(one);

    const Subspace im = alpha_image(h), ke = alpha_kernel(h);
    CHECK(nucleus(a).contains(im));
    CHECK(is_hom_ideal(h, im).passed);
    CHECK(is_hom_ideal(h, ke).passed);
    CHECK(centralizer(a).contains(h.alpha()(*one)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) CHECK(ke.contains(associator(a, a.basis(i), a.basis(j), a.basis(k))));

    for (const auto& r : verify_unital_identities(h, *one)) CHECK(r.status == IdentityStatus::Pass);

    const CodimReport c = codim_analysis(h, *one);
    CHECK(c.violations.empty());
    if (c.alpha_surjective) CHECK(c.alpha_injective);
    if (c.alpha_injective) CHECK(check_associative(a).passed);
    if (c.predicted_associative) CHECK(c.actual_associative);

    if (ke.dim() < n) {
      const AssociativeFactor fct = associative_factor(h);
      CHECK(check_associative(fct.quotient).passed);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector lhs = fct.projection.apply(multiply(a, a.basis(i), a.basis(j)));
          const Vector rhs = multiply(fct.quotient, fct.projection.apply(a.basis(i)), fct.projection.apply(a.basis(j)));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("detwist round trip on weakly unital bijective examples") {
  Gen g(505);
  for (int t = 0; t < kTrials; ++t) {
    const FieldSpec f = small_field(g);
    const Recipe recipe = g.coin() ? Recipe::Yau : Recipe::GeneralizedYau;
    RandomOptions opts;
    opts.require_bijective = true;
    const HomAlgebra h = random_hom_algebra(f, 1 + g.below(4), recipe, g.seed(), opts);
    const DetwistResult r = detwist(h);
    CHECK(check_associative(r.detwisted).passed);
    CHECK(is_left_unit(r.detwisted, r.left_unit));
    CHECK(generalized_twist(r.detwisted, h.alpha()).algebra() == h.algebra());
    for (const auto& rep : verify_weak_unit_identities(h)) CHECK(rep.status == IdentityStatus::Pass);
  }
}

TEST_CASE("yau twists have a two-sided weak unit and no embedding obstruction") {
  Gen g(606);
  for (int t = 0; t < kTrials / 2; ++t) {
    const FieldSpec f = small_field(g);
    const HomAlgebra h = random_hom_algebra(f, 1 + g.below(4), Recipe::Yau, g.seed());
    const Algebra& a = h.algebra();
    const std::size_t n = a.dim();
    // c*e_i = alpha(e_i) and e_i*c = alpha(e_i) stacked into one system in c.
    Matrix lhs(f, 2 * n * n, n);
    Vector rhs(f, 2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
          lhs(i * n + k, r) = a.sc(r, i, k);
          lhs(n * n + i * n + k, r) = a.sc(i, r, k);
        }
        rhs[i * n + k] = h.alpha().matrix()(k, i);
        rhs[n * n + i * n + k] = h.alpha().matrix()(k, i);
      }
    const auto both = solve_affine(lhs, rhs);
    REQUIRE(both);
    const UnitReport u = find_units(h);
    REQUIRE(u.weak_left_units);
    REQUIRE(u.weak_right_units);
    CHECK(u.weak_left_units->homogeneous.contains(both->particular - u.weak_left_units->particular));
    CHECK(u.weak_right_units->homogeneous.contains(both->particular - u.weak_right_units->particular));
    CHECK_FALSE(weak_embedding_obstruction(h).has_value());
  }
}

TEST_CASE("twist enumeration is closed and multiplicative on random commutative algebras") {
  Gen g(707);
  for (int t = 0; t < 30; ++t) {
    const FieldSpec f = FieldSpec::prime(g.coin() ? 2 : 3);
    const std::size_t n = 1 + g.below(3);
    const HomAlgebra h = random_hom_algebra(f, n, Recipe::CentralMultiplication, g.seed());
    const Algebra& a = h.algebra();
    const Element one = *find_two_sided_unit(a);
    const TwistCorrespondence tc = enumerate_twists(a, one);
    // Brute force over every element: exactly the listed ones qualify.
    const Subspace nuc = nucleus(a);
    std::size_t qualifying = 0;
    for (const Vector& x : oracle::all_vectors(f, n)) qualifying += is_twist_element(a, x, nuc);
    CHECK(qualifying == tc.ac_elements.size());
    for (std::size_t i = 0; i < tc.ac_elements.size(); ++i) {
      CHECK(check_hom_associative(HomAlgebra(a, tc.twist_maps[i])).passed);
      for (std::size_t j = 0; j < tc.ac_elements.size(); ++j)
        CHECK(tc.twist_maps[i].compose(tc.twist_maps[j])(one) == multiply(a, tc.ac_elements[i], tc.ac_elements[j]));
    }
    // The twisting element of h itself is among them.
    bool has_own = false;
    for (const auto& m : tc.twist_maps) has_own |= m == h.alpha();
    CHECK(has_own);
  }
}

TEST_CASE("unitalization of random associative algebras") {
  Gen g(808);
  for (int t = 0; t < 50; ++t) {
    const FieldSpec f = small_field(g);
    RandomOptions opts;
    opts.require_bijective = true;
    const HomAlgebra h = random_hom_algebra(f, 1 + g.below(4), Recipe::Yau, g.seed(), opts);
    const Algebra a = detwist(h).detwisted;
    const Algebra u = unitalize_associative(a);
    CHECK(check_associative(u).passed);
    CHECK(is_unit(u, u.basis(0)));
    const Matrix e = unitalization_embedding(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        CHECK(multiply(u, e.apply(a.basis(i)), e.apply(a.basis(j))) == e.apply(multiply(a, a.basis(i), a.basis(j))));
  }
}

TEST_CASE("search matches the naive enumerator on random small specs") {
  Gen g(909);
  static const char* vocabulary[] = {"hom-associative", "associative",        "not-associative", "commutative",
                                     "not-commutative", "weakly-left-unital", "weakly-right-unital",
                                     "codim-im-alpha:0", "codim-im-alpha:1",  "unital:0",        "unital:1",
                                     "identity:alpha-adjoint", "identity:image-left-nucleus",
                                     "identity:alpha-unit-right"};
  int found = 0;
  for (int t = 0; t < 60; ++t) {
    SearchSpec s;
    s.field = FieldSpec::prime(2);
    s.dim = 1 + g.below(2);
    const std::size_t count = 1 + g.below(3);
    bool has_unit = false;
    for (std::size_t c = 0; c < count; ++c) {
      Constraint k = parse_constraint(vocabulary[g.below(14)]);
      if (k.kind == Constraint::Kind::Unital) {
        if (has_unit || k.value >= s.dim) continue;
        has_unit = true;
      }
      if (k.kind == Constraint::Kind::Identity && k.identity == "alpha-unit-right" && !has_unit) continue;
      s.constraints.push_back(k);
    }
    s.goal = g.coin() ? SearchGoal::count_models() : SearchGoal::find_model();
    if (s.dim == 1 && g.coin()) s.field = FieldSpec::prime(3);
    CAPTURE(t);
    const SearchOutcome a = search(s), a2 = search(s), b = naive_enumerate(s);
    CHECK(a.status == b.status);
    CHECK(a.count == b.count);
    CHECK(a.nodes_explored == a2.nodes_explored);
    if (a.model) {
      ++found;
      REQUIRE(b.model);
      CHECK(*a.model == *b.model);
      CHECK(satisfies(*a.model, s));
    }
  }
  CHECK(found > 0);
}

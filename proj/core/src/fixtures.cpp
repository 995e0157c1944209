#include "homalg/fixtures.hpp"

#include <algorithm>

namespace homalg {

namespace {

Fixture non_adjoint() {
  const FieldSpec q = FieldSpec::rationals();
  Algebra a(q, 2);
  a.set_sc(0, 0, 1, Scalar::one(q));  // (l1, l2) * (m1, m2) = (0, l1 m1)
  AlgebraFile file{std::move(a), LinearMap(Matrix::from_ints(q, {{1, 1}, {0, 1}})), std::nullopt,
                   R"({"properties":"associative, commutative, hom-associative, no weak left unit"})"};
  return {"ex-non-adjoint", "(l1,l2)*(m1,m2) = (0, l1 m1) over Q, alpha(l,m) = (l+m, m)", std::move(file), {}, {}};
}

// Q[X] truncated to degree < d, times a 2-dimensional U with u1u1 = u2,
// u2u1 = u1. Basis X^0..X^(d-1), u1, u2.
Fixture dim_two_kernel(std::size_t d) {
  const FieldSpec q = FieldSpec::rationals();
  const std::size_t n = d + 2;
  const std::size_t u1 = d, u2 = d + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("X^" + std::to_string(i));
  names.push_back("u1");
  names.push_back("u2");
  Algebra a(q, n, std::move(names));
  const Scalar one = Scalar::one(q);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) a.set_sc(i, j, i + j, one);
  // U is a module through evaluation at zero.
  for (std::size_t u : {u1, u2}) {
    a.set_sc(0, u, u, one);
    a.set_sc(u, 0, u, one);
  }
  a.set_sc(u1, u1, u2, one);
  a.set_sc(u2, u1, u1, one);

  Matrix alpha(q, n, n);
  Matrix graded(q, n + 1, n);  // extra row d stands for X^d
  for (std::size_t i = 0; i < d; ++i) {
    if (i + 1 < d) alpha(i + 1, i) = one;
    graded(i + 1, i) = one;
  }
  Vector unit(q, n);
  unit[0] = one;
  AlgebraFile file{std::move(a), LinearMap(std::move(alpha)), std::move(unit),
                   R"({"degree_bound":)" + std::to_string(d) +
                       R"(,"truncation":"alpha(X^(d-1)) = X^d leaves the carrier and is stored as 0"})"};
  auto weight = [d](std::size_t i) { return i < d ? i : std::size_t{0}; };
  TripleFilter in_bound = [d, weight](std::size_t i, std::size_t j, std::size_t k) {
    return weight(i) + weight(j) + weight(k) + 1 < d;
  };
  return {"ex-dim-two-kernel", "Q[X] (degree < " + std::to_string(d) + ") x U, alpha(a, u) = (Xa, 0)", std::move(file),
          std::move(in_bound), std::move(graded)};
}

// Basis 1, u, v with uu = v, uv = u; alpha = 0.
Fixture unital_nonassoc_3d() {
  const FieldSpec q = FieldSpec::rationals();
  Algebra a(q, 3, {"1", "u", "v"});
  const Scalar one = Scalar::one(q);
  for (std::size_t i = 0; i < 3; ++i) {
    a.set_sc(0, i, i, one);
    a.set_sc(i, 0, i, one);
  }
  a.set_sc(1, 1, 2, one);
  a.set_sc(1, 2, 1, one);
  AlgebraFile file{std::move(a), LinearMap::zero(q, 3), Vector::from_ints(q, {1, 0, 0}), "{}"};
  return {"unital-nonassoc-3d", "unital, uu = v, uv = u, zero twisting map", std::move(file), {}, {}};
}

Fixture gf2_componentwise() {
  const FieldSpec f = FieldSpec::prime(2);
  Algebra a(f, 2);
  a.set_sc(0, 0, 0, Scalar::one(f));
  a.set_sc(1, 1, 1, Scalar::one(f));
  AlgebraFile file{std::move(a), LinearMap::identity(f, 2), Vector::from_ints(f, {1, 1}), "{}"};
  return {"gf2-componentwise", "GF(2) x GF(2) componentwise, alpha = id", std::move(file), {}, {}};
}

Fixture mat2_gf2() {
  const FieldSpec f = FieldSpec::prime(2);
  Algebra a(f, 4, {"E11", "E12", "E21", "E22"});
  // E_rc at index 2r + c; E_ab E_cd = [b == c] E_ad.
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      if (x % 2 == y / 2) a.set_sc(x, y, 2 * (x / 2) + y % 2, Scalar::one(f));
  AlgebraFile file{std::move(a), LinearMap::identity(f, 4), Vector::from_ints(f, {1, 0, 0, 1}), "{}"};
  return {"mat2-gf2", "2x2 matrices over GF(2), alpha = id", std::move(file), {}, {}};
}

Fixture dual_numbers_q() {
  const FieldSpec q = FieldSpec::rationals();
  Algebra a(q, 2, {"1", "t"});
  const Scalar one = Scalar::one(q);
  a.set_sc(0, 0, 0, one);
  a.set_sc(0, 1, 1, one);
  a.set_sc(1, 0, 1, one);
  AlgebraFile file{std::move(a), LinearMap::identity(q, 2), Vector::from_ints(q, {1, 0}), "{}"};
  return {"dual-numbers-q", "Q[t]/(t^2), alpha = id", std::move(file), {}, {}};
}

}  // namespace

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = {"ex-non-adjoint",    "ex-dim-two-kernel", "unital-nonassoc-3d",
                                               "gf2-componentwise", "mat2-gf2",          "dual-numbers-q"};
  return ids;
}

bool is_fixture_id(std::string_view id) {
  const auto& ids = fixture_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Fixture load_fixture(std::string_view id, std::size_t degree_bound) {
  if (id == "ex-non-adjoint") return non_adjoint();
  if (id == "ex-dim-two-kernel") {
    if (degree_bound < 2) throw Error(ErrorKind::InvalidArgument, "degree bound must be >= 2");
    return dim_two_kernel(degree_bound);
  }
  if (id == "unital-nonassoc-3d") return unital_nonassoc_3d();
  if (id == "gf2-componentwise") return gf2_componentwise();
  if (id == "mat2-gf2") return mat2_gf2();
  if (id == "dual-numbers-q") return dual_numbers_q();
  throw Error(ErrorKind::InvalidArgument, "unknown fixture \"" + std::string(id) + "\"");
}

}  // namespace homalg

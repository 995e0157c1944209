#include "homalg/analysis.hpp"

#include <utility>

#include "identity_runner.hpp"

namespace homalg {

using detail::run_pairs;
using detail::run_singles;
using detail::run_triples;

std::string_view to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Pass: return "pass";
    case IdentityStatus::Fail: return "fail";
    case IdentityStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::string_view to_string(CodimClause c) {
  switch (c) {
    case CodimClause::None: return "none";
    case CodimClause::CodimAtMostOne: return "codim<=1";
    case CodimClause::CodimTwoCommutative: return "codim<=2+commutative";
    case CodimClause::CodimTwoInjectiveOnImage: return "codim<=2+alpha-injective-on-image";
  }
  return "unknown";
}

Subspace alpha_image(const HomAlgebra& h) { return image_basis(h.alpha().matrix()); }

Subspace alpha_kernel(const HomAlgebra& h) { return kernel_basis(h.alpha().matrix()); }

CheckResult is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace outside the carrier");
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const Vector v = s.basis_vector(b);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector left = multiply(a, a.basis(i), v);
      if (!s.contains(left)) return CheckResult::fail({{i, b}, std::move(left), v, "e_i * s leaves the subspace"});
      Vector right = multiply(a, v, a.basis(i));
      if (!s.contains(right)) return CheckResult::fail({{b, i}, std::move(right), v, "s * e_i leaves the subspace"});
    }
  }
  return CheckResult::pass();
}

CheckResult is_hom_ideal(const HomAlgebra& h, const Subspace& s) {
  if (auto r = is_two_sided_ideal(h.algebra(), s); !r) return r;
  for (std::size_t b = 0; b < s.dim(); ++b) {
    const Vector v = s.basis_vector(b);
    Vector image = h.alpha()(v);
    if (!s.contains(image)) return CheckResult::fail({{b}, std::move(image), v, "alpha(s) leaves the subspace"});
  }
  return CheckResult::pass();
}

Subspace nucleus(const Algebra& a) {
  const std::size_t n = a.dim();
  // table[(x*n + y)*n + z] = associator(e_x, e_y, e_z)
  std::vector<Vector> table;
  table.reserve(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) table.push_back(associator(a, a.basis(x), a.basis(y), a.basis(z)));
  auto at = [&](std::size_t x, std::size_t y, std::size_t z) -> const Vector& { return table[(x * n + y) * n + z]; };

  Matrix system(a.field(), 3 * n * n * n, n);
  std::size_t row = 0;
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t m = 0; m < n; ++m) {
            const Vector& v = slot == 0 ? at(m, i, j) : slot == 1 ? at(i, m, j) : at(i, j, m);
            system(row, m) = v[k];
          }
          ++row;
        }
      }
  return kernel_basis(system);
}

Subspace centralizer(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix system(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m) system(i * n + k, m) = a.sc(m, i, k) - a.sc(i, m, k);
  return kernel_basis(system);
}


const std::vector<std::string>& unital_identity_ids() {
  static const std::vector<std::string> ids = {
      "alpha-adjoint",        "alpha-unit-right",     "alpha-pull",           "image-left-nucleus",
      "image-middle-nucleus", "image-right-nucleus", "alpha-kills-associator",
  };
  return ids;
}

std::vector<IdentityReport> verify_unital_identities(const HomAlgebra& h, const std::optional<Element>& unit,
                                                     CheckMode mode) {
  const Algebra& a = h.algebra();
  const LinearMap& alpha = h.alpha();
  const std::size_t n = a.dim();
  if (mode == CheckMode::Strict) {
    if (!unit) throw Error(ErrorKind::Precondition, "unital identities need a unit");
    if (!is_unit(a, *unit)) throw Error(ErrorKind::Precondition, "supplied element is not a two-sided unit");
    if (auto hom = check_hom_associative(h); !hom) {
      throw Error(ErrorKind::Precondition, "not hom-associative: " + hom.witness->to_string());
    }
  }

  std::vector<Vector> e, ae;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis(i));
    ae.push_back(alpha.image_of_basis(i));
  }
  auto mul = [&](const Vector& x, const Vector& y) { return multiply(a, x, y); };
  auto prod = [&](std::size_t i, std::size_t j) { return a.basis_product(i, j); };

  std::vector<IdentityReport> out;
  out.push_back(run_pairs("alpha-adjoint", "alpha(x)*y = x*alpha(y)", n,
                          [&](std::size_t x, std::size_t y) { return std::pair{mul(ae[x], e[y]), mul(e[x], ae[y])}; }));

  if (unit) {
    const Vector alpha_one = alpha(*unit);
    out.push_back(run_singles("alpha-unit-right", "x*alpha(1) = alpha(x)", n,
                              [&](std::size_t x) { return std::pair{mul(e[x], alpha_one), ae[x]}; }));
  } else {
    out.push_back({"alpha-unit-right", "x*alpha(1) = alpha(x)", IdentityStatus::Skipped, std::nullopt,
                   "no unit available"});
  }

  out.push_back(run_pairs("alpha-pull", "alpha(x*y) = x*alpha(y)", n,
                          [&](std::size_t x, std::size_t y) { return std::pair{alpha(prod(x, y)), mul(e[x], ae[y])}; }));
  out.push_back(run_triples("image-left-nucleus", "alpha(x)*(y*z) = (alpha(x)*y)*z", n,
                            [&](std::size_t x, std::size_t y, std::size_t z) {
                              return std::pair{mul(ae[x], prod(y, z)), mul(mul(ae[x], e[y]), e[z])};
                            }));
  out.push_back(run_triples("image-middle-nucleus", "x*(alpha(y)*z) = (x*alpha(y))*z", n,
                            [&](std::size_t x, std::size_t y, std::size_t z) {
                              return std::pair{mul(e[x], mul(ae[y], e[z])), mul(mul(e[x], ae[y]), e[z])};
                            }));
  out.push_back(run_triples("image-right-nucleus", "x*(y*alpha(z)) = (x*y)*alpha(z)", n,
                            [&](std::size_t x, std::size_t y, std::size_t z) {
                              return std::pair{mul(e[x], mul(e[y], ae[z])), mul(prod(x, y), ae[z])};
                            }));
  out.push_back(run_triples("alpha-kills-associator", "alpha(x*(y*z)) = alpha((x*y)*z)", n,
                            [&](std::size_t x, std::size_t y, std::size_t z) {
                              return std::pair{alpha(mul(e[x], prod(y, z))), alpha(mul(prod(x, y), e[z]))};
                            }));
  return out;
}

AssociativeFactor associative_factor(const HomAlgebra& h) { return associative_factor(h, alpha_kernel(h)); }

AssociativeFactor associative_factor(const HomAlgebra& h, const Subspace& kernel) {
  const Algebra& a = h.algebra();
  const std::size_t n = a.dim();
  if (auto ideal = is_hom_ideal(h, kernel); !ideal) {
    throw Error(ErrorKind::NotWellDefined,
                "kernel is not a hom-ideal, the product does not descend: " + ideal.witness->to_string());
  }
  if (kernel.dim() == n) throw Error(ErrorKind::Degenerate, "associative factor is zero-dimensional");

  const Subspace kept = complement(kernel);
  std::vector<std::size_t> coords = kept.pivots();
  const std::size_t m = coords.size();

  // pi(e_c): unit vector for kept coordinates, minus the kernel row otherwise.
  Matrix projection(a.field(), m, n);
  for (std::size_t s = 0; s < m; ++s) projection(s, coords[s]) = Scalar::one(a.field());
  for (std::size_t r = 0; r < kernel.dim(); ++r) {
    const std::size_t pivot = kernel.pivots()[r];
    for (std::size_t s = 0; s < m; ++s) projection(s, pivot) = -kernel.basis()(r, coords[s]);
  }

  Algebra quotient(a.field(), m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      quotient.set_basis_product(s, t, projection.apply(a.basis_product(coords[s], coords[t])));

  Matrix induced(a.field(), m, m);
  for (std::size_t s = 0; s < m; ++s) induced.set_column(s, projection.apply(h.alpha().image_of_basis(coords[s])));
  LinearMap induced_alpha(std::move(induced));
  const bool injective = induced_alpha.is_injective();
  return {std::move(quotient), std::move(projection), std::move(induced_alpha), kernel, injective};
}

CodimReport codim_analysis(const HomAlgebra& h, const Element& unit) {
  const Algebra& a = h.algebra();
  const std::size_t n = a.dim();
  if (auto hom = check_hom_associative(h); !hom) {
    throw Error(ErrorKind::Precondition, "codim analysis needs a hom-associative input: " + hom.witness->to_string());
  }
  if (!is_unit(a, unit)) throw Error(ErrorKind::Precondition, "codim analysis needs a two-sided unit");

  CodimReport r;
  r.dim = n;
  const Matrix& m = h.alpha().matrix();
  const Subspace image = alpha_image(h);
  r.rank_alpha = image.dim();
  r.codim_im_alpha = n - r.rank_alpha;
  r.kernel_dim = alpha_kernel(h).dim();
  r.alpha_injective = r.kernel_dim == 0;
  r.alpha_surjective = r.rank_alpha == n;
  r.alpha_injective_on_image = rank(m * m) == r.rank_alpha;
  r.unit_in_image = image.contains(unit);
  r.commutative = check_commutative(a).passed;

  const std::vector<Vector> unit_vec{unit};
  r.decomposition.unit_line = Subspace::span(a.field(), n, unit_vec);
  r.decomposition.image = image;
  const Subspace covered = r.decomposition.unit_line.sum(image);
  r.decomposition.complement = complement(covered);
  r.decomposition.direct = !r.unit_in_image && covered.dim() + r.decomposition.complement.dim() == n;

  if (r.codim_im_alpha <= 1) {
    r.clause = CodimClause::CodimAtMostOne;
  } else if (r.codim_im_alpha <= 2 && r.commutative) {
    r.clause = CodimClause::CodimTwoCommutative;
  } else if (r.codim_im_alpha <= 2 && r.alpha_injective_on_image) {
    r.clause = CodimClause::CodimTwoInjectiveOnImage;
  }
  r.predicted_associative = r.clause != CodimClause::None;

  auto assoc = check_associative(a);
  r.actual_associative = assoc.passed;
  r.associativity_witness = std::move(assoc.witness);

  if (r.decomposition.complement.dim() == 1) {
    const Vector u = r.decomposition.complement.basis_vector(0);
    const Vector uu = multiply(a, u, u);
    r.complement_cube_associates = multiply(a, u, uu) == multiply(a, uu, u);
  }

  if (r.alpha_surjective && !r.alpha_injective) r.violations.push_back("alpha surjective but not injective");
  if (r.alpha_injective && !r.actual_associative) r.violations.push_back("alpha injective but product not associative");
  if (r.predicted_associative && !r.actual_associative) {
    r.violations.push_back("clause " + std::string(to_string(r.clause)) + " fired but product not associative");
  }
  return r;
}

}  // namespace homalg

#include "homalg/twisting.hpp"

#include <algorithm>
#include <utility>

#include "identity_runner.hpp"

namespace homalg {

using detail::run_pairs;
using detail::run_triples;

namespace {

// x*y := map(x y) on every basis pair.
Algebra twisted_product(const Algebra& a, const LinearMap& map) {
  Algebra out(a.field(), a.dim(), a.basis_names());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set_basis_product(i, j, map(a.basis_product(i, j)));
  return out;
}

void require_hom_associative(const HomAlgebra& h, const char* what) {
  if (auto r = check_hom_associative(h); !r) {
    throw Error(ErrorKind::Postcondition, std::string(what) + " is not hom-associative: " + r.witness->to_string());
  }
}

bool lexicographically_less(const Vector& x, const Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar& a = x[i];
    const Scalar& b = y[i];
    if (a == b) continue;
    if (a.field().is_prime_field()) return a.residue() < b.residue();
    return a.rational() < b.rational();
  }
  return false;
}

}  // namespace

HomAlgebra yau_twist(const Algebra& a, const LinearMap& alpha) {
  if (alpha.dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "twisting map dimension differs from algebra");
  if (auto r = check_associative(a); !r) {
    throw Error(ErrorKind::NotAssociative, "yau twist needs an associative algebra: " + r.witness->to_string());
  }
  const auto unit = find_two_sided_unit(a);
  if (!unit) throw Error(ErrorKind::NotUnital, "yau twist needs a unital algebra");
  if (const Vector image = alpha(*unit); !(image == *unit)) {
    throw Error(ErrorKind::NotEndomorphism, "alpha(1) = " + image.to_string() + " differs from 1 = " + unit->to_string());
  }
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = alpha(a.basis_product(i, j));
      Vector rhs = multiply(a, alpha.image_of_basis(i), alpha.image_of_basis(j));
      if (!(lhs == rhs)) {
        Witness w{{i, j}, std::move(lhs), std::move(rhs), "alpha(xy) != alpha(x)alpha(y)"};
        throw Error(ErrorKind::NotEndomorphism, w.to_string());
      }
    }
  HomAlgebra out(twisted_product(a, alpha), alpha);
  require_hom_associative(out, "yau twist");
  return out;
}

CheckResult check_twist_condition(const Algebra& a, const LinearMap& alpha) {
  const std::size_t n = a.dim();
  if (alpha.dim() != n) throw Error(ErrorKind::DimensionMismatch, "twisting map dimension differs from algebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = alpha(multiply(a, alpha.image_of_basis(i), alpha(a.basis_product(j, k))));
        Vector rhs = alpha(multiply(a, alpha(ij), alpha.image_of_basis(k)));
        if (!(lhs == rhs)) {
          return CheckResult::fail(
              {{i, j, k}, std::move(lhs), std::move(rhs), "alpha(alpha(x)alpha(yz)) != alpha(alpha(xy)alpha(z))"});
        }
      }
    }
  return CheckResult::pass();
}

HomAlgebra generalized_twist(const Algebra& a, const LinearMap& alpha) {
  if (auto r = check_twist_condition(a, alpha); !r) throw Error(ErrorKind::ConditionFails, r.witness->to_string());
  HomAlgebra out(twisted_product(a, alpha), alpha);
  require_hom_associative(out, "generalized twist");
  return out;
}

DetwistResult detwist(const HomAlgebra& h) {
  if (auto r = check_hom_associative(h); !r) throw Error(ErrorKind::NotHomAssociative, r.witness->to_string());
  auto beta = h.alpha().inverse();
  if (!beta) throw Error(ErrorKind::NotBijective, "twisting map is not bijective");
  auto weak = find_weak_left_units(h);
  if (!weak) throw Error(ErrorKind::NoWeakLeftUnit, "no c with c*x = alpha(x) for all x");

  DetwistResult out{twisted_product(h.algebra(), *beta), weak->particular, *beta};
  if (auto r = check_associative(out.detwisted); !r) {
    throw Error(ErrorKind::Postcondition, "detwisted product is not associative: " + r.witness->to_string());
  }
  if (!is_left_unit(out.detwisted, out.left_unit)) {
    throw Error(ErrorKind::Postcondition, "weak left unit is not a left unit of the detwisted product");
  }
  if (!(twisted_product(out.detwisted, h.alpha()) == h.algebra())) {
    throw Error(ErrorKind::Postcondition, "re-twisting does not reproduce the input product");
  }
  return out;
}

const std::vector<std::string>& weak_unit_identity_ids() {
  static const std::vector<std::string> ids = {
      "inverse-shift",       "weak-unit-symmetry", "inverse-product-rule", "inverse-associator",
      "inverse-left-absorb", "weak-unit-swap",     "inverse-unit-shift",
  };
  return ids;
}

std::vector<IdentityReport> verify_weak_unit_identities(const HomAlgebra& h, CheckMode mode) {
  const Algebra& a = h.algebra();
  const std::size_t n = a.dim();
  const auto beta = h.alpha().inverse();
  const auto weak = find_weak_left_units(h);
  if (mode == CheckMode::Strict) {
    if (auto r = check_hom_associative(h); !r) {
      throw Error(ErrorKind::Precondition, "not hom-associative: " + r.witness->to_string());
    }
    if (!beta) throw Error(ErrorKind::Precondition, "twisting map is not bijective");
    if (!weak) throw Error(ErrorKind::Precondition, "no weak left unit");
  }

  const std::vector<std::pair<std::string, std::string>> statements = {
      {"inverse-shift", "(beta(x)*y)*z = x*(y*beta(z))"},
      {"weak-unit-symmetry", "(c*x)*y = (x*c)*y"},
      {"inverse-product-rule", "beta(x)*beta(y) = beta(c)*beta(beta(x*y))"},
      {"inverse-associator", "x*beta(y*z) = beta(x*y)*z"},
      {"inverse-left-absorb", "x*beta(y) = beta((beta(c)*x)*y)"},
      {"weak-unit-swap", "(c*(beta(x)*y))*z = (x*(y*beta(c)))*z"},
      {"inverse-unit-shift", "(x*beta(c))*beta(y*z) = (x*beta(y))*z"},
  };
  std::vector<IdentityReport> out;
  auto skip = [&](std::size_t from, const char* why) {
    for (std::size_t i = from; i < statements.size(); ++i) {
      out.push_back({statements[i].first, statements[i].second, IdentityStatus::Skipped, std::nullopt, why});
    }
  };
  if (!beta) {
    skip(0, "twisting map is not bijective");
    return out;
  }

  std::vector<Vector> e, be;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis(i));
    be.push_back(beta->image_of_basis(i));
  }
  const LinearMap& b = *beta;
  auto mul = [&](const Vector& x, const Vector& y) { return multiply(a, x, y); };
  auto prod = [&](std::size_t i, std::size_t j) { return a.basis_product(i, j); };

  out.push_back(run_triples(statements[0].first, statements[0].second, n, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(mul(be[x], e[y]), e[z]), mul(e[x], mul(e[y], be[z]))};
  }));
  if (!weak) {
    skip(1, "no weak left unit");
    return out;
  }

  const Vector c = weak->particular;
  const Vector bc = b(c);
  out.push_back(run_pairs(statements[1].first, statements[1].second, n, [&](std::size_t x, std::size_t y) {
    return std::pair{mul(mul(c, e[x]), e[y]), mul(mul(e[x], c), e[y])};
  }));
  out.push_back(run_pairs(statements[2].first, statements[2].second, n, [&](std::size_t x, std::size_t y) {
    return std::pair{mul(be[x], be[y]), mul(bc, b(b(prod(x, y))))};
  }));
  out.push_back(run_triples(statements[3].first, statements[3].second, n, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(e[x], b(prod(y, z))), mul(b(prod(x, y)), e[z])};
  }));
  out.push_back(run_pairs(statements[4].first, statements[4].second, n, [&](std::size_t x, std::size_t y) {
    return std::pair{mul(e[x], be[y]), b(mul(mul(bc, e[x]), e[y]))};
  }));
  out.push_back(run_triples(statements[5].first, statements[5].second, n, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(mul(c, mul(be[x], e[y])), e[z]), mul(mul(e[x], mul(e[y], bc)), e[z])};
  }));
  out.push_back(run_triples(statements[6].first, statements[6].second, n, [&](std::size_t x, std::size_t y, std::size_t z) {
    return std::pair{mul(mul(e[x], bc), b(prod(y, z))), mul(mul(e[x], be[y]), e[z])};
  }));
  return out;
}

bool is_twist_element(const Algebra& a, const Element& x, const Subspace& nucleus_space) {
  const std::size_t n = a.dim();
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = multiply(a, a.basis(i), x);
    if (!(left == multiply(a, x, a.basis(i)))) return false;
    if (!nucleus_space.contains(left)) return false;
    generators.push_back(std::move(left));
  }
  const Subspace ideal = Subspace::span(a.field(), n, generators);
  for (const Vector& g : ideal.basis_vectors())
    for (std::size_t j = 0; j < n; ++j) {
      if (!ideal.contains(multiply(a, a.basis(j), g))) return false;
      if (!ideal.contains(multiply(a, g, a.basis(j)))) return false;
    }
  return true;
}

namespace {

LinearMap left_multiplication(const Algebra& a, const Element& x) {
  Matrix m(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.set_column(i, multiply(a, x, a.basis(i)));
  return LinearMap(std::move(m));
}

// Elements of s in canonical order: coefficient tuples over the RREF basis in
// odometer order, then sorted by coordinates.
std::vector<Element> enumerate_subspace(const Subspace& s, std::uint64_t budget) {
  const FieldSpec field = s.field();
  const std::uint64_t p = field.characteristic();
  const std::size_t d = s.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > budget / p) {
      throw Error(ErrorKind::BudgetExceeded, "candidate space has " + std::to_string(p) + "^" + std::to_string(d) +
                                                 " elements, over the budget of " + std::to_string(budget));
    }
    total *= p;
  }
  if (total > budget) throw Error(ErrorKind::BudgetExceeded, "candidate space exceeds the enumeration budget");

  const std::vector<Vector> basis = s.basis_vectors();
  std::vector<Element> out;
  out.reserve(total);
  std::vector<std::uint64_t> digits(d, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    Vector v(field, s.ambient_dim());
    for (std::size_t i = 0; i < d; ++i) {
      if (digits[i]) v.add_scaled(Scalar::from_int(field, static_cast<long>(digits[i])), basis[i]);
    }
    out.push_back(std::move(v));
    for (std::size_t i = 0; i < d; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace

TwistCorrespondence enumerate_twists(const Algebra& a, const Element& unit, const EnumerateOptions& options) {
  if (!is_unit(a, unit)) throw Error(ErrorKind::NotUnital, "supplied element is not a two-sided unit");
  const std::size_t n = a.dim();
  const Subspace nuc = nucleus(a);

  std::vector<Element> candidates;
  if (a.field().is_prime_field()) {
    // Linear part of the conditions: central, and e_i * x in the nucleus.
    const Subspace central = centralizer(a);
    const std::vector<Vector> central_basis = central.basis_vectors();
    const std::size_t d = central_basis.size();
    Matrix system(a.field(), n * n, d);
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t i = 0; i < n; ++i) {
        const Vector residual = nuc.reduce(multiply(a, a.basis(i), central_basis[t]));
        for (std::size_t k = 0; k < n; ++k) system(i * n + k, t) = residual[k];
      }
    std::vector<Vector> linear_basis;
    for (const Vector& coeffs : kernel_basis(system).basis_vectors()) {
      Vector v(a.field(), n);
      for (std::size_t t = 0; t < d; ++t) v.add_scaled(coeffs[t], central_basis[t]);
      linear_basis.push_back(std::move(v));
    }
    candidates = enumerate_subspace(Subspace::span(a.field(), n, linear_basis), options.budget);
  } else {
    candidates = options.candidates;
  }

  TwistCorrespondence out{unit, {}, {}};
  for (const Element& x : candidates) {
    if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "candidate element has wrong length");
    if (is_twist_element(a, x, nuc)) out.ac_elements.push_back(x);
  }
  std::sort(out.ac_elements.begin(), out.ac_elements.end(), lexicographically_less);
  out.ac_elements.erase(std::unique(out.ac_elements.begin(), out.ac_elements.end()), out.ac_elements.end());

  for (const Element& x : out.ac_elements) {
    LinearMap map = left_multiplication(a, x);
    if (auto r = check_hom_associative(HomAlgebra(a, map)); !r) {
      throw Error(ErrorKind::Postcondition, "twisting map of " + x.to_string() + " is not compatible: " +
                                                r.witness->to_string());
    }
    if (!(map(unit) == x)) throw Error(ErrorKind::Postcondition, "alpha(1) does not recover " + x.to_string());
    out.twist_maps.push_back(std::move(map));
  }

  if (a.field().is_prime_field()) {
    for (std::size_t i = 0; i < out.ac_elements.size(); ++i)
      for (std::size_t j = 0; j < out.ac_elements.size(); ++j) {
        const Element product = multiply(a, out.ac_elements[i], out.ac_elements[j]);
        const LinearMap composed = out.twist_maps[i].compose(out.twist_maps[j]);
        if (!(composed(unit) == product)) {
          throw Error(ErrorKind::Postcondition, "composition is not carried to multiplication");
        }
        if (!std::binary_search(out.ac_elements.begin(), out.ac_elements.end(), product, lexicographically_less)) {
          throw Error(ErrorKind::Postcondition, "twist elements are not closed under multiplication");
        }
      }
  }
  return out;
}

Algebra unitalize_associative(const Algebra& a) {
  if (auto r = check_associative(a); !r) {
    throw Error(ErrorKind::NotAssociative, "unitalization needs an associative algebra: " + r.witness->to_string());
  }
  const std::size_t n = a.dim();
  std::vector<std::string> names{"1"};
  for (std::size_t i = 0; i < n; ++i) names.push_back(a.basis_name(i));
  Algebra out(a.field(), n + 1, std::move(names));
  const Scalar one = Scalar::one(a.field());
  out.set_sc(0, 0, 0, one);
  for (std::size_t i = 0; i < n; ++i) {
    out.set_sc(0, i + 1, i + 1, one);
    out.set_sc(i + 1, 0, i + 1, one);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.set_sc(i + 1, j + 1, k + 1, a.sc(i, j, k));
  }
  return out;
}

Matrix unitalization_embedding(const Algebra& a) {
  Matrix m(a.field(), a.dim() + 1, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i + 1, i) = Scalar::one(a.field());
  return m;
}

std::optional<ObstructionWitness> weak_embedding_obstruction(const HomAlgebra& h) {
  const Algebra& a = h.algebra();
  const LinearMap& alpha = h.alpha();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.basis_product(i, j).is_zero()) continue;
      Vector twisted = multiply(a, alpha.image_of_basis(i), alpha.image_of_basis(j));
      if (!twisted.is_zero()) return ObstructionWitness{a.basis(i), a.basis(j), std::move(twisted)};
    }
  // y in the kernel of left multiplication by e_i; y -> alpha(e_i)*alpha(y) is
  // linear there, so a kernel basis decides it.
  for (std::size_t i = 0; i < n; ++i) {
    const Subspace annihilator = kernel_basis(left_multiplication(a, a.basis(i)).matrix());
    for (const Vector& y : annihilator.basis_vectors()) {
      Vector twisted = multiply(a, alpha.image_of_basis(i), alpha(y));
      if (!twisted.is_zero()) return ObstructionWitness{a.basis(i), y, std::move(twisted)};
    }
  }
  return std::nullopt;
}

}  // namespace homalg

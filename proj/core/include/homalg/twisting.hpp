#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homalg/analysis.hpp"

namespace homalg {

/// Yau twist x*y := alpha(mu(x, y)) of a unital associative algebra by a
/// unit-preserving algebra endomorphism. Throws NotAssociative, NotUnital or
/// NotEndomorphism.
HomAlgebra yau_twist(const Algebra& a, const LinearMap& alpha);

/// alpha(alpha(x) alpha(yz)) == alpha(alpha(xy) alpha(z)) on all basis triples.
CheckResult check_twist_condition(const Algebra& a, const LinearMap& alpha);

/// x*y := alpha(xy) for any linear alpha satisfying the twist condition.
/// Throws ConditionFails with the failing triple in the message.
HomAlgebra generalized_twist(const Algebra& a, const LinearMap& alpha);

struct DetwistResult {
  Algebra detwisted;   // x . y = beta(x * y)
  Element left_unit;   // weak left unit c of the input
  LinearMap beta;      // alpha^-1
};

/// Recovers the associative algebra behind a weakly left unital hom-associative
/// algebra with bijective twisting map. Throws NotHomAssociative, NotBijective
/// or NoWeakLeftUnit; Postcondition if a recovered invariant fails.
DetwistResult detwist(const HomAlgebra& h);

/// Ids checked by verify_weak_unit_identities, in evaluation order.
const std::vector<std::string>& weak_unit_identity_ids();

/// The identities satisfied by a weakly left unital hom-associative algebra
/// with bijective alpha (beta = alpha^-1, c a weak left unit). In diagnostic
/// mode missing preconditions turn into skipped reports rather than errors.
std::vector<IdentityReport> verify_weak_unit_identities(const HomAlgebra& h, CheckMode mode = CheckMode::Strict);

struct TwistCorrespondence {
  Element unit;
  std::vector<Element> ac_elements;
  std::vector<LinearMap> twist_maps;  // twist_maps[i] = left multiplication by ac_elements[i]
};

struct EnumerateOptions {
  /// Maximum number of candidate elements enumerated over GF(p).
  std::uint64_t budget = std::uint64_t{1} << 20;
  /// Candidates to verify; required over the rationals, ignored otherwise.
  std::vector<Element> candidates;
};

/// Central elements a with Aa an ideal whose elements lie in the nucleus,
/// paired with the twisting maps x -> a*x. Throws NotUnital, BudgetExceeded,
/// Postcondition if a pairing law fails.
TwistCorrespondence enumerate_twists(const Algebra& a, const Element& unit, const EnumerateOptions& options = {});

/// Membership test used by enumerate_twists.
bool is_twist_element(const Algebra& a, const Element& x, const Subspace& nucleus_space);

/// k + A with (l, a)(m, b) = (lm, lb + ma + ab); basis (1, 0), (0, e_1), ...
/// Throws NotAssociative.
Algebra unitalize_associative(const Algebra& a);
/// Matrix of the embedding a -> (0, a).
Matrix unitalization_embedding(const Algebra& a);

struct ObstructionWitness {
  Element x;
  Element y;
  Element twisted_product;  // alpha(x)*alpha(y), nonzero although x*y = 0
};

/// Looks for x, y with x*y = 0 but alpha(x)*alpha(y) != 0. Such a pair rules
/// out any embedding into a weakly left unital hom-associative algebra whose
/// twisting map extends alpha. nullopt does not prove embeddability.
std::optional<ObstructionWitness> weak_embedding_obstruction(const HomAlgebra& h);

}  // namespace homalg

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

enum class IdentityStatus { Pass, Fail, Skipped };

std::string_view to_string(IdentityStatus s);

struct IdentityReport {
  std::string id;
  std::string statement;
  IdentityStatus status = IdentityStatus::Pass;
  std::optional<Witness> witness;  // present iff status == Fail
  std::string note;
};

/// Strict mode enforces preconditions (throws Precondition); diagnostic mode
/// evaluates whatever can be evaluated and skips the rest.
enum class CheckMode { Strict, Diagnostic };

Subspace alpha_image(const HomAlgebra& h);
Subspace alpha_kernel(const HomAlgebra& h);

/// Stable under left and right multiplication by every basis vector.
CheckResult is_two_sided_ideal(const Algebra& a, const Subspace& s);
/// Two-sided ideal that is also alpha-stable.
CheckResult is_hom_ideal(const HomAlgebra& h, const Subspace& s);

/// Elements whose associator vanishes in every slot.
Subspace nucleus(const Algebra& a);
/// Elements commuting with every element.
Subspace centralizer(const Algebra& a);

/// Identity ids checked by verify_unital_identities, in evaluation order.
const std::vector<std::string>& unital_identity_ids();

/// Evaluates the seven identities that every unital hom-associative algebra
/// satisfies, on all basis pairs/triples. The identity that mentions the unit
/// is skipped in diagnostic mode when no unit is supplied.
std::vector<IdentityReport> verify_unital_identities(const HomAlgebra& h, const std::optional<Element>& unit,
                                                     CheckMode mode = CheckMode::Strict);

struct AssociativeFactor {
  Algebra quotient;
  Matrix projection;  // (dim - dim kernel) x dim
  LinearMap induced_alpha;
  Subspace kernel;
  bool induced_alpha_injective = false;
};

/// V / Ke(alpha) with the induced product and twisting map.
/// Throws NotWellDefined if the kernel is not a hom-ideal, Degenerate if the
/// quotient would be zero-dimensional.
AssociativeFactor associative_factor(const HomAlgebra& h);
/// Same, quotienting by an explicitly supplied kernel.
AssociativeFactor associative_factor(const HomAlgebra& h, const Subspace& kernel);

enum class CodimClause { None, CodimAtMostOne, CodimTwoCommutative, CodimTwoInjectiveOnImage };

std::string_view to_string(CodimClause c);

struct CodimDecomposition {
  Subspace unit_line;
  Subspace image;
  Subspace complement;  // complement of unit_line + image
  bool direct = false;  // unit_line, image and complement are independent and span V
};

struct CodimReport {
  std::size_t dim = 0;
  std::size_t rank_alpha = 0;
  std::size_t codim_im_alpha = 0;
  std::size_t kernel_dim = 0;
  bool alpha_injective = false;
  bool alpha_surjective = false;
  bool alpha_injective_on_image = false;
  bool unit_in_image = false;
  bool commutative = false;
  CodimDecomposition decomposition;
  bool predicted_associative = false;
  CodimClause clause = CodimClause::None;
  bool actual_associative = false;
  std::optional<Witness> associativity_witness;
  /// u*(u*u) == (u*u)*u for the generator u of a one-dimensional complement.
  std::optional<bool> complement_cube_associates;
  /// Failed consistency implications; empty on every valid input.
  std::vector<std::string> violations;
};

/// Requires a hom-associative h and a two-sided unit (throws Precondition).
CodimReport codim_analysis(const HomAlgebra& h, const Element& unit);

}  // namespace homalg

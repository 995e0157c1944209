#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/io.hpp"

namespace homalg {

struct Fixture {
  std::string id;
  std::string summary;
  AlgebraFile file;
  /// Triples whose products stay inside a truncated carrier; empty means all.
  TripleFilter in_bound;
  /// Truncated carriers only: alpha with one extra row for the degree that
  /// leaves the carrier, so that its kernel is not polluted by truncation.
  std::optional<Matrix> graded_alpha;
};

/// ex-non-adjoint, ex-dim-two-kernel, unital-nonassoc-3d, gf2-componentwise,
/// mat2-gf2, dual-numbers-q.
const std::vector<std::string>& fixture_ids();
bool is_fixture_id(std::string_view id);

/// degree_bound only affects ex-dim-two-kernel (polynomials of degree < bound).
/// Throws InvalidArgument for unknown ids or a bound below 2.
Fixture load_fixture(std::string_view id, std::size_t degree_bound = 6);

}  // namespace homalg

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "homalg/algebra.hpp"
#include "homalg/search.hpp"

namespace homalg {

/// In-memory form of an algebra file. Indices in files are 0-based.
struct AlgebraFile {
  Algebra algebra;
  std::optional<LinearMap> alpha;
  std::optional<Element> unit;
  /// Free-form JSON object, kept verbatim (canonically re-serialized).
  std::string metadata = "{}";

  bool has_alpha() const noexcept { return alpha.has_value(); }
  /// Throws InvalidArgument when the file carries no twisting map.
  HomAlgebra hom_algebra() const;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

AlgebraFile to_file(const HomAlgebra& h, std::optional<Element> unit = std::nullopt);
AlgebraFile to_file(const Algebra& a);

/// Throws Error(Parse) naming the offending field.
AlgebraFile parse_algebra_file(std::string_view text);
/// Canonical text: sorted sparse products, scalars in lowest terms.
std::string dump_algebra_file(const AlgebraFile& file);

AlgebraFile load_algebra_file(const std::filesystem::path& path);
void save_algebra_file(const AlgebraFile& file, const std::filesystem::path& path);

/// {"field": {"GF": p}, "dim": n, "constraints": [...], "goal": "find-model" |
///  "count-models" | {"countermodel": id}, "budget": N,
///  "fixed": {"alpha": [[...]], "products": [[i, j, k, "v"], ...]}}
SearchSpec parse_search_spec(std::string_view text);
SearchSpec load_search_spec(const std::filesystem::path& path);

}  // namespace homalg

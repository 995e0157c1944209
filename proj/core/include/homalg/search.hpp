#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/algebra.hpp"

namespace homalg {

/// Closed vocabulary of properties a candidate (product, alpha) must satisfy.
struct Constraint {
  enum class Kind {
    HomAssociative,
    Associative,
    NotAssociative,
    Commutative,
    NotCommutative,
    Unital,             // value = index of the designated unit basis vector
    WeaklyLeftUnital,
    WeaklyRightUnital,
    CodimImAlpha,       // value = required codimension of the image of alpha
    Identity,           // identity id must pass
  };

  Kind kind = Kind::HomAssociative;
  std::size_t value = 0;
  std::string identity;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// "hom-associative", "unital:0", "codim-im-alpha:2", "identity:alpha-pull", ...
Constraint parse_constraint(std::string_view text);
std::string to_string(const Constraint& c);

enum class GoalKind { FindModel, CountModels, FindCountermodel };

struct SearchGoal {
  GoalKind kind = GoalKind::FindModel;
  std::string identity;  // FindCountermodel: identity that must fail

  static SearchGoal find_model() { return {}; }
  static SearchGoal count_models() { return {GoalKind::CountModels, {}}; }
  static SearchGoal countermodel(std::string id) { return {GoalKind::FindCountermodel, std::move(id)}; }
};

struct FixedEntry {
  std::size_t i, j, k;
  std::uint32_t value;
};

struct SearchSpec {
  FieldSpec field = FieldSpec::prime(2);
  std::size_t dim = 1;
  std::vector<Constraint> constraints;
  SearchGoal goal;
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// Row-major alpha residues, dim*dim entries.
  std::optional<std::vector<std::uint32_t>> fixed_alpha;
  std::vector<FixedEntry> fixed_products;
};

enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded, Count };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<HomAlgebra> model;
  std::uint64_t count = 0;  // models accepted so far (complete when status == Count)
  std::uint64_t nodes_explored = 0;
  bool interrupted = false;
};

struct SearchControl {
  /// Polled between nodes; setting it ends the search as BudgetExceeded.
  const std::atomic<bool>* stop = nullptr;
  std::function<void(std::uint64_t nodes)> progress;
  std::uint64_t progress_interval = std::uint64_t{1} << 16;
};

/// Throws InvalidArgument for malformed specs.
void validate(const SearchSpec& spec);

/// Depth-first search over alpha entries (row-major) and then structure
/// constants in (i, j, k) order, values ascending, pruning on every decided
/// constraint instance. Found models are re-verified with the library checkers.
SearchOutcome search(const SearchSpec& spec, const SearchControl& control = {});

/// Every full assignment in the same order, no pruning, same acceptance test.
/// Throws CapExceeded when p^(free entries) > cap.
SearchOutcome naive_enumerate(const SearchSpec& spec, std::uint64_t cap = std::uint64_t{1} << 24);

/// Acceptance test on a finished candidate, through the library checkers.
bool satisfies(const HomAlgebra& h, const SearchSpec& spec);

/// Unital (unit e_0), hom-associative, codim Im(alpha) = codim, not associative.
SearchOutcome explore_codim(FieldSpec field, std::size_t dim, std::size_t codim, std::uint64_t budget,
                            std::optional<std::vector<std::uint32_t>> fixed_alpha = std::nullopt,
                            const SearchControl& control = {});
/// explore_codim with codim 2; requires dim >= 4.
SearchOutcome explore_codim2(FieldSpec field, std::size_t dim, std::uint64_t budget, const SearchControl& control = {});

}  // namespace homalg

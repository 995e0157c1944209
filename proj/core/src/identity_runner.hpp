#pragma once

// Exhaustive basis-tuple evaluation shared by the identity suites.

#include <functional>
#include <string>
#include <utility>

#include "homalg/analysis.hpp"

namespace homalg::detail {

using SingleRule = std::function<std::pair<Vector, Vector>(std::size_t)>;
using PairRule = std::function<std::pair<Vector, Vector>(std::size_t, std::size_t)>;
using TripleRule = std::function<std::pair<Vector, Vector>(std::size_t, std::size_t, std::size_t)>;

inline IdentityReport run_singles(std::string id, std::string statement, std::size_t n, const SingleRule& rule) {
  IdentityReport r{std::move(id), std::move(statement), IdentityStatus::Pass, std::nullopt, {}};
  for (std::size_t x = 0; x < n; ++x) {
    auto [lhs, rhs] = rule(x);
    if (!(lhs == rhs)) {
      r.status = IdentityStatus::Fail;
      r.witness = Witness{{x}, std::move(lhs), std::move(rhs), r.statement};
      return r;
    }
  }
  return r;
}

inline IdentityReport run_pairs(std::string id, std::string statement, std::size_t n, const PairRule& rule) {
  IdentityReport r{std::move(id), std::move(statement), IdentityStatus::Pass, std::nullopt, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [lhs, rhs] = rule(x, y);
      if (!(lhs == rhs)) {
        r.status = IdentityStatus::Fail;
        r.witness = Witness{{x, y}, std::move(lhs), std::move(rhs), r.statement};
        return r;
      }
    }
  return r;
}

inline IdentityReport run_triples(std::string id, std::string statement, std::size_t n, const TripleRule& rule) {
  IdentityReport r{std::move(id), std::move(statement), IdentityStatus::Pass, std::nullopt, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto [lhs, rhs] = rule(x, y, z);
        if (!(lhs == rhs)) {
          r.status = IdentityStatus::Fail;
          r.witness = Witness{{x, y, z}, std::move(lhs), std::move(rhs), r.statement};
          return r;
        }
      }
  return r;
}

}  // namespace homalg::detail

#include "homalg/search.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "homalg/analysis.hpp"
#include "homalg/twisting.hpp"

namespace homalg {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "exhausted-none";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
    case SearchStatus::Count: return "count";
  }
  return "unknown";
}

namespace {

struct KindName {
  Constraint::Kind kind;
  std::string_view name;
  bool takes_value;
};

constexpr KindName kKindNames[] = {
    {Constraint::Kind::HomAssociative, "hom-associative", false},
    {Constraint::Kind::Associative, "associative", false},
    {Constraint::Kind::NotAssociative, "not-associative", false},
    {Constraint::Kind::Commutative, "commutative", false},
    {Constraint::Kind::NotCommutative, "not-commutative", false},
    {Constraint::Kind::Unital, "unital", true},
    {Constraint::Kind::WeaklyLeftUnital, "weakly-left-unital", false},
    {Constraint::Kind::WeaklyRightUnital, "weakly-right-unital", false},
    {Constraint::Kind::CodimImAlpha, "codim-im-alpha", true},
    {Constraint::Kind::Identity, "identity", false},
};

bool is_unital_identity(std::string_view id) {
  const auto& ids = unital_identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_weak_unit_identity(std::string_view id) {
  const auto& ids = weak_unit_identity_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

Constraint parse_constraint(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  for (const auto& entry : kKindNames) {
    if (entry.name != head) continue;
    Constraint c;
    c.kind = entry.kind;
    if (entry.kind == Constraint::Kind::Identity) {
      if (tail.empty()) throw Error(ErrorKind::Parse, "identity constraint needs an id: identity:<id>");
      c.identity = std::string(tail);
    } else if (entry.takes_value) {
      auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), c.value);
      if (tail.empty() || ec != std::errc{} || ptr != tail.data() + tail.size()) {
        throw Error(ErrorKind::Parse, "constraint \"" + std::string(text) + "\" needs a non-negative integer argument");
      }
    } else if (colon != std::string_view::npos) {
      throw Error(ErrorKind::Parse, "constraint \"" + std::string(head) + "\" takes no argument");
    }
    return c;
  }
  throw Error(ErrorKind::Parse, "unknown constraint \"" + std::string(text) + "\"");
}

std::string to_string(const Constraint& c) {
  for (const auto& entry : kKindNames) {
    if (entry.kind != c.kind) continue;
    if (c.kind == Constraint::Kind::Identity) return "identity:" + c.identity;
    if (entry.takes_value) return std::string(entry.name) + ":" + std::to_string(c.value);
    return std::string(entry.name);
  }
  return "unknown";
}

void validate(const SearchSpec& spec) {
  if (!spec.field.is_prime_field()) throw Error(ErrorKind::InvalidArgument, "search runs over prime fields only");
  const std::size_t n = spec.dim;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "search dimension must be >= 1");
  const std::uint32_t p = spec.field.characteristic();
  bool has_unit = false;
  for (const Constraint& c : spec.constraints) {
    if (c.kind == Constraint::Kind::Unital) {
      if (c.value >= n) throw Error(ErrorKind::InvalidArgument, "unit basis index out of range");
      has_unit = true;
    }
    if (c.kind == Constraint::Kind::CodimImAlpha && c.value > n) {
      throw Error(ErrorKind::InvalidArgument, "codimension exceeds the dimension");
    }
  }
  auto check_identity = [&](const std::string& id) {
    if (is_unital_identity(id)) {
      // Only this identity mentions the unit; the others are evaluated on any candidate.
      if (id == "alpha-unit-right" && !has_unit) throw Error(ErrorKind::InvalidArgument, "identity " + id + " needs a unital:<i> constraint");
    } else if (!is_weak_unit_identity(id)) {
      throw Error(ErrorKind::InvalidArgument, "unknown identity \"" + id + "\"");
    }
  };
  for (const Constraint& c : spec.constraints)
    if (c.kind == Constraint::Kind::Identity) check_identity(c.identity);
  if (spec.goal.kind == GoalKind::FindCountermodel) check_identity(spec.goal.identity);
  if (spec.fixed_alpha) {
    if (spec.fixed_alpha->size() != n * n) throw Error(ErrorKind::InvalidArgument, "fixed alpha must have dim*dim entries");
    for (std::uint32_t v : *spec.fixed_alpha)
      if (v >= p) throw Error(ErrorKind::InvalidArgument, "fixed alpha entry is not a residue");
  }
  for (const FixedEntry& e : spec.fixed_products) {
    if (e.i >= n || e.j >= n || e.k >= n) throw Error(ErrorKind::InvalidArgument, "fixed product index out of range");
    if (e.value >= p) throw Error(ErrorKind::InvalidArgument, "fixed product entry is not a residue");
  }
}

bool satisfies(const HomAlgebra& h, const SearchSpec& spec) {
  const Algebra& a = h.algebra();
  std::optional<Element> unit;
  for (const Constraint& c : spec.constraints)
    if (c.kind == Constraint::Kind::Unital) unit = a.basis(c.value);

  auto identity_status = [&](const std::string& id) {
    const auto reports = is_unital_identity(id) ? verify_unital_identities(h, unit, CheckMode::Diagnostic)
                                                : verify_weak_unit_identities(h, CheckMode::Diagnostic);
    for (const auto& r : reports)
      if (r.id == id) return r.status;
    throw Error(ErrorKind::InvalidArgument, "unknown identity \"" + id + "\"");
  };

  for (const Constraint& c : spec.constraints) {
    bool ok = true;
    switch (c.kind) {
      case Constraint::Kind::HomAssociative: ok = check_hom_associative(h).passed; break;
      case Constraint::Kind::Associative: ok = check_associative(a).passed; break;
      case Constraint::Kind::NotAssociative: ok = !check_associative(a).passed; break;
      case Constraint::Kind::Commutative: ok = check_commutative(a).passed; break;
      case Constraint::Kind::NotCommutative: ok = !check_commutative(a).passed; break;
      case Constraint::Kind::Unital: ok = is_unit(a, a.basis(c.value)); break;
      case Constraint::Kind::WeaklyLeftUnital: ok = find_weak_left_units(h).has_value(); break;
      case Constraint::Kind::WeaklyRightUnital: ok = find_weak_right_units(h).has_value(); break;
      case Constraint::Kind::CodimImAlpha: ok = a.dim() - rank(h.alpha().matrix()) == c.value; break;
      case Constraint::Kind::Identity: ok = identity_status(c.identity) == IdentityStatus::Pass; break;
    }
    if (!ok) return false;
  }
  if (spec.goal.kind == GoalKind::FindCountermodel) return identity_status(spec.goal.identity) == IdentityStatus::Fail;
  return true;
}

namespace {

using Residue = std::uint32_t;
constexpr std::int32_t kUnset = -1;

// Variables: alpha(r, c) at r*n + c, then sc(i, j, k) at n^2 + (i*n + j)*n + k.
struct Layout {
  std::size_t n;
  std::size_t alpha(std::size_t r, std::size_t c) const { return r * n + c; }
  std::size_t sc(std::size_t i, std::size_t j, std::size_t k) const { return n * n + (i * n + j) * n + k; }
  std::size_t total() const { return n * n + n * n * n; }
};

class Zp {
 public:
  explicit Zp(Residue p) : p_(p) {}
  Residue add(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + b) % p_); }
  Residue sub(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + p_ - b) % p_); }
  Residue mul(Residue a, Residue b) const { return static_cast<Residue>(std::uint64_t{a} * b % p_); }
  Residue inv(Residue a) const {
    Residue result = 1, base = a;
    for (Residue e = p_ - 2; e; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  Residue p() const { return p_; }

 private:
  Residue p_;
};

std::size_t rank_mod(std::vector<std::vector<Residue>> m, const Zp& f) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Residue inv = f.inv(m[r][c]);
    for (Residue& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Residue factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(factor, m[r][k]));
    }
    ++r;
  }
  return r;
}

// Direct evaluation of a complete assignment; shared by search leaves and the
// naive enumerator.
class LeafChecker {
 public:
  LeafChecker(const SearchSpec& spec) : spec_(spec), lay_{spec.dim}, f_(spec.field.characteristic()) {
    for (const Constraint& c : spec.constraints)
      if (c.kind == Constraint::Kind::Identity) needs_library_ = true;
    if (spec.goal.kind == GoalKind::FindCountermodel) needs_library_ = true;
  }

  bool accepts(const std::vector<std::int32_t>& v) const {
    for (const Constraint& c : spec_.constraints) {
      switch (c.kind) {
        case Constraint::Kind::HomAssociative: if (!hom_associative(v)) return false; break;
        case Constraint::Kind::Associative: if (!associative(v)) return false; break;
        case Constraint::Kind::NotAssociative: if (associative(v)) return false; break;
        case Constraint::Kind::Commutative: if (!commutative(v)) return false; break;
        case Constraint::Kind::NotCommutative: if (commutative(v)) return false; break;
        case Constraint::Kind::Unital: if (!unital(v, c.value)) return false; break;
        case Constraint::Kind::WeaklyLeftUnital: if (!weak_unit(v, true)) return false; break;
        case Constraint::Kind::WeaklyRightUnital: if (!weak_unit(v, false)) return false; break;
        case Constraint::Kind::CodimImAlpha: if (spec_.dim - alpha_rank(v) != c.value) return false; break;
        case Constraint::Kind::Identity: break;
      }
    }
    if (needs_library_) return satisfies(to_hom_algebra(v), spec_);
    return true;
  }

  std::size_t alpha_rank(const std::vector<std::int32_t>& v) const {
    const std::size_t n = spec_.dim;
    std::vector<std::vector<Residue>> m(n, std::vector<Residue>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m[r][c] = at(v, lay_.alpha(r, c));
    return rank_mod(std::move(m), f_);
  }

  HomAlgebra to_hom_algebra(const std::vector<std::int32_t>& v) const {
    const std::size_t n = spec_.dim;
    const FieldSpec field = spec_.field;
    Algebra a(field, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) a.set_sc(i, j, k, Scalar::from_int(field, v[lay_.sc(i, j, k)]));
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::from_int(field, v[lay_.alpha(r, c)]);
    return HomAlgebra(std::move(a), LinearMap(std::move(m)));
  }

 private:
  static Residue at(const std::vector<std::int32_t>& v, std::size_t idx) { return static_cast<Residue>(v[idx]); }

  // (x * y)_l for basis-coordinate vectors given as residue arrays.
  std::vector<Residue> product(const std::vector<std::int32_t>& v, const std::vector<Residue>& x,
                               const std::vector<Residue>& y) const {
    const std::size_t n = spec_.dim;
    std::vector<Residue> out(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (!x[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!y[b]) continue;
        const Residue coeff = f_.mul(x[a], y[b]);
        for (std::size_t l = 0; l < n; ++l) out[l] = f_.add(out[l], f_.mul(coeff, at(v, lay_.sc(a, b, l))));
      }
    }
    return out;
  }
  std::vector<Residue> basis(std::size_t i) const {
    std::vector<Residue> e(spec_.dim, 0);
    e[i] = 1;
    return e;
  }
  std::vector<Residue> basis_product(const std::vector<std::int32_t>& v, std::size_t i, std::size_t j) const {
    std::vector<Residue> out(spec_.dim);
    for (std::size_t k = 0; k < spec_.dim; ++k) out[k] = at(v, lay_.sc(i, j, k));
    return out;
  }
  std::vector<Residue> alpha_column(const std::vector<std::int32_t>& v, std::size_t c) const {
    std::vector<Residue> out(spec_.dim);
    for (std::size_t r = 0; r < spec_.dim; ++r) out[r] = at(v, lay_.alpha(r, c));
    return out;
  }

  bool hom_associative(const std::vector<std::int32_t>& v) const {
    const std::size_t n = spec_.dim;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (product(v, alpha_column(v, i), basis_product(v, j, k)) !=
              product(v, basis_product(v, i, j), alpha_column(v, k))) {
            return false;
          }
        }
    return true;
  }
  bool associative(const std::vector<std::int32_t>& v) const {
    const std::size_t n = spec_.dim;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (product(v, basis_product(v, i, j), basis(k)) != product(v, basis(i), basis_product(v, j, k))) return false;
        }
    return true;
  }
  bool commutative(const std::vector<std::int32_t>& v) const {
    for (std::size_t i = 0; i < spec_.dim; ++i)
      for (std::size_t j = 0; j < spec_.dim; ++j)
        if (basis_product(v, i, j) != basis_product(v, j, i)) return false;
    return true;
  }
  bool unital(const std::vector<std::int32_t>& v, std::size_t u) const {
    for (std::size_t i = 0; i < spec_.dim; ++i) {
      if (basis_product(v, u, i) != basis(i) || basis_product(v, i, u) != basis(i)) return false;
    }
    return true;
  }
  // Solvable iff appending the targets does not raise the rank.
  bool weak_unit(const std::vector<std::int32_t>& v, bool left) const {
    const std::size_t n = spec_.dim;
    std::vector<std::vector<Residue>> sys(n * n, std::vector<Residue>(n + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        auto& row = sys[i * n + k];
        for (std::size_t u = 0; u < n; ++u) row[u] = left ? at(v, lay_.sc(u, i, k)) : at(v, lay_.sc(i, u, k));
        row[n] = at(v, lay_.alpha(k, i));
      }
    std::vector<std::vector<Residue>> lhs = sys;
    for (auto& row : lhs) row.pop_back();
    return rank_mod(std::move(lhs), f_) == rank_mod(std::move(sys), f_);
  }

  const SearchSpec& spec_;
  Layout lay_;
  Zp f_;
  bool needs_library_ = false;
};

enum class GroupMode { Hold, SomeFail };

struct Monomial {
  Residue coeff;
  std::uint8_t degree;
  std::uint32_t vars[3];
};

struct Instance {
  std::uint32_t first;
  std::uint32_t count;
  std::uint32_t group;
};

// Polynomial constraint instances over the variables, evaluated three-valued:
// a monomial with a zero factor is zero even when other factors are unset.
class Propagator {
 public:
  Propagator(const SearchSpec& spec, Zp f) : lay_{spec.dim}, f_(f), occurs_(lay_.total()) {
    const std::size_t n = spec.dim;
    for (const Constraint& c : spec.constraints) {
      switch (c.kind) {
        case Constraint::Kind::HomAssociative: {
          const auto g = add_group(GroupMode::Hold);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                  Poly poly;
                  for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) {
                      add_term(poly, 1, {lay_.alpha(a, i), lay_.sc(j, k, b), lay_.sc(a, b, l)});
                      add_term(poly, f_.p() - 1, {lay_.sc(i, j, b), lay_.alpha(a, k), lay_.sc(b, a, l)});
                    }
                  add_instance(g, poly);
                }
          break;
        }
        case Constraint::Kind::Associative:
        case Constraint::Kind::NotAssociative: {
          const auto g = add_group(c.kind == Constraint::Kind::Associative ? GroupMode::Hold : GroupMode::SomeFail);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                  Poly poly;
                  for (std::size_t b = 0; b < n; ++b) {
                    add_term(poly, 1, {lay_.sc(i, j, b), lay_.sc(b, k, l)});
                    add_term(poly, f_.p() - 1, {lay_.sc(j, k, b), lay_.sc(i, b, l)});
                  }
                  add_instance(g, poly);
                }
          break;
        }
        case Constraint::Kind::Commutative:
        case Constraint::Kind::NotCommutative: {
          const auto g = add_group(c.kind == Constraint::Kind::Commutative ? GroupMode::Hold : GroupMode::SomeFail);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
              for (std::size_t l = 0; l < n; ++l) {
                Poly poly;
                add_term(poly, 1, {lay_.sc(i, j, l)});
                add_term(poly, f_.p() - 1, {lay_.sc(j, i, l)});
                add_instance(g, poly);
              }
          break;
        }
        default: break;
      }
    }
    for (auto& list : occurs_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    decided_.assign(instances_.size(), 0);
    violated_.assign(instances_.size(), 0);
  }

  /// Decides every instance whose value is already fixed (root state).
  void settle_all(const std::vector<std::int32_t>& values) {
    for (std::uint32_t id = 0; id < instances_.size(); ++id) decide(id, values);
  }

  /// Re-examines instances touching var. Returns the trail mark for undo.
  std::size_t on_assign(std::size_t var, const std::vector<std::int32_t>& values) {
    const std::size_t mark = trail_.size();
    for (std::uint32_t id : occurs_[var])
      if (!decided_[id]) decide(id, values);
    return mark;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t id = trail_.back();
      trail_.pop_back();
      Group& g = groups_[instances_[id].group];
      decided_[id] = 0;
      ++g.undecided;
      if (violated_[id]) {
        violated_[id] = 0;
        --g.violated;
        if (g.mode == GroupMode::Hold) --hard_violations_;
      }
    }
  }

  bool conflict() const {
    if (hard_violations_) return true;
    for (const Group& g : groups_)
      if (g.mode == GroupMode::SomeFail && g.undecided == 0 && g.violated == 0) return true;
    return false;
  }

 private:
  using Poly = std::map<std::vector<std::uint32_t>, Residue>;

  struct Group {
    GroupMode mode;
    std::size_t undecided = 0;
    std::size_t violated = 0;
  };

  std::uint32_t add_group(GroupMode mode) {
    groups_.push_back({mode});
    return static_cast<std::uint32_t>(groups_.size() - 1);
  }

  void add_term(Poly& poly, Residue coeff, std::vector<std::size_t> vars) {
    std::vector<std::uint32_t> key(vars.begin(), vars.end());
    std::sort(key.begin(), key.end());
    Residue& slot = poly[key];
    slot = f_.add(slot, coeff);
  }

  // Identically zero polynomials are dropped.
  void add_instance(std::uint32_t group, const Poly& poly) {
    const auto first = static_cast<std::uint32_t>(monomials_.size());
    for (const auto& [vars, coeff] : poly) {
      if (!coeff) continue;
      Monomial m{coeff, static_cast<std::uint8_t>(vars.size()), {0, 0, 0}};
      for (std::size_t i = 0; i < vars.size(); ++i) m.vars[i] = vars[i];
      monomials_.push_back(m);
    }
    const auto count = static_cast<std::uint32_t>(monomials_.size()) - first;
    if (!count) return;
    const auto id = static_cast<std::uint32_t>(instances_.size());
    instances_.push_back({first, count, group});
    ++groups_[group].undecided;
    for (std::uint32_t m = first; m < first + count; ++m)
      for (std::uint8_t d = 0; d < monomials_[m].degree; ++d) occurs_[monomials_[m].vars[d]].push_back(id);
  }

  void decide(std::uint32_t id, const std::vector<std::int32_t>& values) {
    const Instance& inst = instances_[id];
    Residue sum = 0;
    for (std::uint32_t m = inst.first; m < inst.first + inst.count; ++m) {
      const Monomial& mono = monomials_[m];
      Residue prod = mono.coeff;
      bool zero = false, unknown = false;
      for (std::uint8_t d = 0; d < mono.degree; ++d) {
        const std::int32_t x = values[mono.vars[d]];
        if (x == kUnset) {
          unknown = true;
        } else if (x == 0) {
          zero = true;
          break;
        } else {
          prod = f_.mul(prod, static_cast<Residue>(x));
        }
      }
      if (zero) continue;
      if (unknown) return;
      sum = f_.add(sum, prod);
    }
    Group& g = groups_[inst.group];
    decided_[id] = 1;
    trail_.push_back(id);
    --g.undecided;
    if (sum) {
      violated_[id] = 1;
      ++g.violated;
      if (g.mode == GroupMode::Hold) ++hard_violations_;
    }
  }

  Layout lay_;
  Zp f_;
  std::vector<Group> groups_;
  std::vector<Monomial> monomials_;
  std::vector<Instance> instances_;
  std::vector<std::vector<std::uint32_t>> occurs_;
  std::vector<std::uint8_t> decided_;
  std::vector<std::uint8_t> violated_;
  std::vector<std::uint32_t> trail_;
  std::size_t hard_violations_ = 0;
};

// Entries fixed by the spec itself (alpha, product entries). With
// include_unit, the entries pinned by unital:<u> as well.
bool fixed_values(const SearchSpec& spec, bool include_unit, std::vector<std::int32_t>& values) {
  const Layout lay{spec.dim};
  const std::size_t n = spec.dim;
  bool consistent = true;
  auto pin = [&](std::size_t var, std::int32_t v) {
    if (values[var] != kUnset && values[var] != v) consistent = false;
    values[var] = v;
  };
  if (spec.fixed_alpha) {
    for (std::size_t idx = 0; idx < n * n; ++idx) pin(idx, static_cast<std::int32_t>((*spec.fixed_alpha)[idx]));
  }
  for (const FixedEntry& e : spec.fixed_products) pin(lay.sc(e.i, e.j, e.k), static_cast<std::int32_t>(e.value));
  if (include_unit) {
    for (const Constraint& c : spec.constraints) {
      if (c.kind != Constraint::Kind::Unital) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          pin(lay.sc(c.value, i, k), i == k ? 1 : 0);
          pin(lay.sc(i, c.value, k), i == k ? 1 : 0);
        }
    }
  }
  return consistent;
}

class Searcher {
 public:
  Searcher(const SearchSpec& spec, const SearchControl& control)
      : spec_(spec), control_(control), lay_{spec.dim}, f_(spec.field.characteristic()), leaf_(spec), prop_(spec, f_) {
    for (const Constraint& c : spec.constraints)
      if (c.kind == Constraint::Kind::CodimImAlpha) codims_.push_back(c.value);
  }

  SearchOutcome run() {
    values_.assign(lay_.total(), kUnset);
    if (!fixed_values(spec_, true, values_)) return finish();
    for (std::size_t var = 0; var < lay_.total(); ++var)
      if (values_[var] == kUnset) free_.push_back(var);
    alpha_done_ = static_cast<std::size_t>(
        std::find_if(free_.begin(), free_.end(), [&](std::size_t v) { return v >= spec_.dim * spec_.dim; }) -
        free_.begin());
    prop_.settle_all(values_);
    if (!prop_.conflict()) dfs(0);
    return finish();
  }

 private:
  SearchOutcome finish() {
    if (stopped_) {
      out_.status = SearchStatus::BudgetExceeded;
    } else if (spec_.goal.kind == GoalKind::CountModels) {
      out_.status = SearchStatus::Count;
    } else {
      out_.status = out_.model ? SearchStatus::Found : SearchStatus::ExhaustedNone;
    }
    return std::move(out_);
  }

  // True when the search should unwind.
  bool dfs(std::size_t pos) {
    if (pos == alpha_done_ && !codims_.empty()) {
      const std::size_t r = leaf_.alpha_rank(values_);
      for (std::size_t codim : codims_)
        if (spec_.dim - r != codim) return false;
    }
    if (pos == free_.size()) {
      if (!leaf_.accepts(values_)) return false;
      ++out_.count;
      if (spec_.goal.kind == GoalKind::CountModels) return false;
      HomAlgebra model = leaf_.to_hom_algebra(values_);
      if (!satisfies(model, spec_)) throw Error(ErrorKind::Postcondition, "found model fails re-verification");
      out_.model = std::move(model);
      return true;
    }
    const std::size_t var = free_[pos];
    for (Residue val = 0; val < f_.p(); ++val) {
      if (out_.nodes_explored >= spec_.budget) {
        stopped_ = true;
        return true;
      }
      if (control_.stop && control_.stop->load(std::memory_order_relaxed)) {
        stopped_ = true;
        out_.interrupted = true;
        return true;
      }
      ++out_.nodes_explored;
      if (control_.progress && out_.nodes_explored % control_.progress_interval == 0) {
        control_.progress(out_.nodes_explored);
      }
      values_[var] = static_cast<std::int32_t>(val);
      const std::size_t mark = prop_.on_assign(var, values_);
      const bool unwind = !prop_.conflict() && dfs(pos + 1);
      prop_.undo(mark);
      if (unwind) return true;
    }
    values_[var] = kUnset;
    return false;
  }

  const SearchSpec& spec_;
  const SearchControl& control_;
  Layout lay_;
  Zp f_;
  LeafChecker leaf_;
  Propagator prop_;
  std::vector<std::size_t> codims_;
  std::vector<std::int32_t> values_;
  std::vector<std::size_t> free_;
  std::size_t alpha_done_ = 0;
  bool stopped_ = false;
  SearchOutcome out_;
};

}  // namespace

SearchOutcome search(const SearchSpec& spec, const SearchControl& control) {
  validate(spec);
  return Searcher(spec, control).run();
}

SearchOutcome naive_enumerate(const SearchSpec& spec, std::uint64_t cap) {
  validate(spec);
  const Layout lay{spec.dim};
  const Residue p = spec.field.characteristic();
  std::vector<std::int32_t> values(lay.total(), kUnset);
  SearchOutcome out;
  const bool consistent = fixed_values(spec, false, values);
  std::vector<std::size_t> free;
  for (std::size_t var = 0; var < lay.total(); ++var)
    if (values[var] == kUnset) free.push_back(var);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (total > cap / p) {
      throw Error(ErrorKind::CapExceeded, "naive enumeration needs " + std::to_string(p) + "^" +
                                              std::to_string(free.size()) + " candidates, over the cap");
    }
    total *= p;
  }
  if (total > cap) throw Error(ErrorKind::CapExceeded, "naive enumeration exceeds the cap");

  const LeafChecker leaf(spec);
  if (consistent) {
    for (std::size_t var : free) values[var] = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
      ++out.nodes_explored;
      if (leaf.accepts(values)) {
        ++out.count;
        if (spec.goal.kind != GoalKind::CountModels) {
          out.model = leaf.to_hom_algebra(values);
          break;
        }
      }
      // Odometer: the last free variable moves fastest.
      for (std::size_t pos = free.size(); pos-- > 0;) {
        if (++values[free[pos]] < static_cast<std::int32_t>(p)) break;
        values[free[pos]] = 0;
      }
    }
  }
  if (spec.goal.kind == GoalKind::CountModels) {
    out.status = SearchStatus::Count;
  } else {
    out.status = out.model ? SearchStatus::Found : SearchStatus::ExhaustedNone;
  }
  return out;
}

SearchOutcome explore_codim(FieldSpec field, std::size_t dim, std::size_t codim, std::uint64_t budget,
                            std::optional<std::vector<std::uint32_t>> fixed_alpha, const SearchControl& control) {
  SearchSpec spec;
  spec.field = field;
  spec.dim = dim;
  spec.constraints = {{Constraint::Kind::Unital, 0, {}},
                      {Constraint::Kind::HomAssociative, 0, {}},
                      {Constraint::Kind::CodimImAlpha, codim, {}},
                      {Constraint::Kind::NotAssociative, 0, {}}};
  spec.goal = SearchGoal::find_model();
  spec.budget = budget;
  spec.fixed_alpha = std::move(fixed_alpha);
  return search(spec, control);
}

SearchOutcome explore_codim2(FieldSpec field, std::size_t dim, std::uint64_t budget, const SearchControl& control) {
  if (dim < 4) throw Error(ErrorKind::InvalidArgument, "codimension-2 exploration needs dim >= 4");
  return explore_codim(field, dim, 2, budget, std::nullopt, control);
}

}  // namespace homalg

#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond the value types, so agreement is meaningful.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "homalg/algebra.hpp"

namespace oracle {

using homalg::Algebra;
using homalg::FieldSpec;
using homalg::HomAlgebra;
using homalg::Matrix;
using homalg::Scalar;
using homalg::Vector;

/// Dense rational matrix as nested vectors.
using QGrid = std::vector<std::vector<mpq_class>>;

QGrid to_grid(const Matrix& m);

/// Gauss-Jordan with column-major pivot search that always swaps in the
/// bottom-most nonzero row (the library takes the first).
struct Echelon {
  QGrid reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref_q(QGrid m);

/// Same over GF(p) with plain 64-bit arithmetic.
using PGrid = std::vector<std::vector<std::int64_t>>;
PGrid to_pgrid(const Matrix& m);
struct PEchelon {
  PGrid reduced;
  std::vector<std::size_t> pivots;
};
PEchelon rref_p(PGrid m, std::int64_t p);

/// Number of v in GF(p)^cols with m v = 0, by exhaustion.
std::uint64_t count_kernel(const Matrix& m);

/// Product of coordinate vectors straight from the raw tensor.
Vector product(const Algebra& a, const Vector& x, const Vector& y);

/// Hom-associativity on every pair of elements of a finite carrier (not just
/// the basis); only for GF(p) with p^dim small.
bool hom_associative_all_elements(const HomAlgebra& h);

/// Every vector of GF(p)^n, in odometer order (first coordinate fastest).
std::vector<Vector> all_vectors(const FieldSpec& f, std::size_t n);

/// Every n x n matrix over GF(p), decoded from an integer index.
Matrix matrix_from_index(const FieldSpec& f, std::size_t n, std::uint64_t index);

/// Raw (sc, alpha) candidate over GF(p) encoded as residues.
struct RawCandidate {
  std::size_t n;
  std::uint32_t p;
  std::vector<std::uint32_t> alpha;  // row-major
  std::vector<std::uint32_t> sc;     // (i*n+j)*n+k
};

/// Counts all (sc, alpha) pairs over GF(p)^dim passing the predicate.
template <class Pred>
std::uint64_t count_raw(std::uint32_t p, std::size_t n, Pred pred) {
  const std::size_t vars = n * n + n * n * n;
  RawCandidate c{n, p, std::vector<std::uint32_t>(n * n, 0), std::vector<std::uint32_t>(n * n * n, 0)};
  std::uint64_t hits = 0;
  std::vector<std::uint32_t> digits(vars, 0);
  while (true) {
    for (std::size_t v = 0; v < n * n; ++v) c.alpha[v] = digits[v];
    for (std::size_t v = 0; v < n * n * n; ++v) c.sc[v] = digits[n * n + v];
    if (pred(c)) ++hits;
    std::size_t pos = 0;
    while (pos < vars && ++digits[pos] == p) digits[pos++] = 0;
    if (pos == vars) break;
  }
  return hits;
}

/// Raw predicates over residues.
bool raw_hom_associative(const RawCandidate& c);
bool raw_associative(const RawCandidate& c);
bool raw_unit(const RawCandidate& c, std::size_t u);

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return rng_() & 1; }
  FieldSpec field();
  Scalar scalar(const FieldSpec& f);
  Scalar nonzero(const FieldSpec& f);
  Vector vector(const FieldSpec& f, std::size_t n);
  /// Sparse-ish matrix; rank varies.
  Matrix matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  Matrix invertible(const FieldSpec& f, std::size_t n);
  Algebra algebra(const FieldSpec& f, std::size_t n);
  std::uint64_t seed() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

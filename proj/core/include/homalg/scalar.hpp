#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "homalg/error.hpp"

namespace homalg {

/// The base field: the rationals or a prime field GF(p) with p < 2^16.
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  static constexpr std::uint32_t kMaxPrime = 1u << 16;

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws Error(InvalidArgument) unless p is a prime in [2, 2^16).
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are canonical in [0, p). Mixing fields throws.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar from_int(FieldSpec field, long value);
  static Scalar from_rational(FieldSpec field, const mpq_class& value);
  /// Accepts "3", "-2/7", "  5 ". Over GF(p) fractions are allowed when the
  /// denominator is a unit mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only meaningful over the rationals.
  const mpq_class& rational() const noexcept { return q_; }
  /// Only meaningful over a prime field.
  std::uint32_t residue() const noexcept { return r_; }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "0", "-2/7", or the residue in [0, p).
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace homalg

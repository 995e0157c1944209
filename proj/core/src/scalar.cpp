#include "homalg/scalar.hpp"

#include <cctype>
#include <ostream>

namespace homalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::NotHomAssociative: return "NotHomAssociative";
    case ErrorKind::ConditionFails: return "ConditionFails";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NoWeakLeftUnit: return "NoWeakLeftUnit";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Postcondition: return "Postcondition";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument,
                "GF(p) requires a prime 2 <= p < 65536, got " + std::to_string(p));
  }
  return FieldSpec{Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p; p < 2^16 so products fit in 64 bits.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar Scalar::zero(FieldSpec field) {
  Scalar s;
  s.field_ = field;
  return s;
}

Scalar Scalar::one(FieldSpec field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldSpec field, long value) {
  Scalar s;
  s.field_ = field;
  if (field.is_rationals()) {
    s.q_ = value;
  } else {
    const long p = field.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(FieldSpec field, const mpq_class& value) {
  Scalar s;
  s.field_ = field;
  if (field.is_rationals()) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorKind::DivisionByZero,
                "denominator of " + value.get_str() + " vanishes in " + field.to_string());
  }
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  s.r_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
  return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto valid_integer = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Parse, "not an exact scalar: \"" + std::string(text) + "\"");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  return from_rational(field, mpq_class(n, d));
}

bool Scalar::is_zero() const { return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar s = *this;
  if (field_.is_rationals()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = inverse_mod(r_, field_.characteristic());
  }
  return s;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::FieldMismatch,
                "scalars from " + field_.to_string() + " and " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rationals()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.characteristic() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rationals()) {
    q_ += rhs.q_;
  } else {
    r_ = (r_ + rhs.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rationals()) {
    q_ -= rhs.q_;
  } else {
    const std::uint32_t p = field_.characteristic();
    r_ = (r_ + p - rhs.r_) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rationals()) {
    q_ *= rhs.q_;
  } else {
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * rhs.r_ % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace homalg

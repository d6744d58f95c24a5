#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace a22 {

using Rational = mpq_class;
using Integer = mpz_class;

// Which exact scalar field a value lives in: Q (prime == 0) or F_p.
class Domain {
 public:
  constexpr Domain() = default;

  static constexpr Domain rationals() { return Domain(); }
  // Throws ConfigurationError unless p is prime.
  static Domain prime_field(std::uint32_t p);

  constexpr bool is_rational() const { return prime_ == 0; }
  constexpr std::uint32_t characteristic() const { return prime_; }

  std::string name() const;

  friend constexpr bool operator==(Domain, Domain) = default;

 private:
  friend class Scalar;
  constexpr explicit Domain(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_ = 0;
};

// Element of F_p held in canonical range [0, p).
struct PrimeElement {
  std::uint64_t value = 0;
  std::uint32_t prime = 2;

  friend bool operator==(const PrimeElement&, const PrimeElement&) = default;
};

// Exact scalar: a reduced rational or an F_p element. Arithmetic across
// different domains throws DomainError.
class Scalar {
 public:
  Scalar() : rep_(Rational(0)) {}
  Scalar(long value, Domain domain);
  explicit Scalar(Rational value);
  Scalar(const Integer& value, Domain domain);

  static Scalar zero(Domain d) { return Scalar(0, d); }
  static Scalar one(Domain d) { return Scalar(1, d); }

  Domain domain() const;
  bool is_zero() const;
  bool is_one() const;

  // Valid only in the matching domain; otherwise DomainError.
  const Rational& rational() const;
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Equality across domains is false, never an error.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<Rational, PrimeElement> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_prime(std::uint64_t n);

}  // namespace a22

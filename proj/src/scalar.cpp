#include "a22/scalar.hpp"

#include <ostream>

#include "a22/errors.hpp"

namespace a22 {

namespace {

std::uint64_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce(const Integer& value, std::uint32_t p) {
  Integer r = value % p;
  if (r < 0) r += p;
  return r.get_ui();
}

// x^(p-2) mod p
std::uint64_t inverse_mod(std::uint64_t x, std::uint32_t p) {
  std::uint64_t result = 1, base = x % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.domain() == b.domain())) {
    throw DomainError("scalar domain mismatch: " + a.domain().name() + " vs " + b.domain().name());
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Domain Domain::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) {
    throw ConfigurationError("not a supported prime: " + std::to_string(p));
  }
  return Domain(p);
}

std::string Domain::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(prime_);
}

Scalar::Scalar(long value, Domain domain) {
  if (domain.is_rational()) {
    rep_ = Rational(value);
  } else {
    rep_ = PrimeElement{reduce(value, domain.characteristic()), domain.characteristic()};
  }
}

Scalar::Scalar(Rational value) {
  value.canonicalize();
  rep_ = std::move(value);
}

Scalar::Scalar(const Integer& value, Domain domain) {
  if (domain.is_rational()) {
    rep_ = Rational(value);
  } else {
    rep_ = PrimeElement{reduce(value, domain.characteristic()), domain.characteristic()};
  }
}

Domain Scalar::domain() const {
  if (const auto* f = std::get_if<PrimeElement>(&rep_)) return Domain(f->prime);
  return Domain::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return sgn(*q) == 0;
  return std::get<PrimeElement>(rep_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return *q == 1;
  return std::get<PrimeElement>(rep_).value == 1;
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return *q;
  throw DomainError("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (const auto* f = std::get_if<PrimeElement>(&rep_)) return f->value;
  throw DomainError("scalar is not a prime-field element");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar out = *this;
  if (auto* q = std::get_if<Rational>(&out.rep_)) {
    *q = 1 / *q;
  } else {
    auto& f = std::get<PrimeElement>(out.rep_);
    f.value = inverse_mod(f.value, f.prime);
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto* q = std::get_if<Rational>(&out.rep_)) {
    *q = -*q;
  } else {
    auto& f = std::get<PrimeElement>(out.rep_);
    f.value = (f.prime - f.value) % f.prime;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same(*this, rhs);
  if (auto* q = std::get_if<Rational>(&rep_)) {
    *q += std::get<Rational>(rhs.rep_);
  } else {
    auto& f = std::get<PrimeElement>(rep_);
    f.value = (f.value + std::get<PrimeElement>(rhs.rep_).value) % f.prime;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same(*this, rhs);
  if (auto* q = std::get_if<Rational>(&rep_)) {
    *q *= std::get<Rational>(rhs.rep_);
  } else {
    auto& f = std::get<PrimeElement>(rep_);
    f.value = (f.value * std::get<PrimeElement>(rhs.rep_).value) % f.prime;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same(*this, rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.rep_ == b.rep_; }

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return q->get_str();
  return std::to_string(std::get<PrimeElement>(rep_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace a22

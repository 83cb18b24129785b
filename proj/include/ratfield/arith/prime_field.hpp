#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ratfield {

using BigInt = mpz_class;
using BigRational = mpq_class;

struct ZeroInverse : std::domain_error {
  ZeroInverse() : std::domain_error("inverse of zero in prime field") {}
};

// Deterministic for every 64-bit input (fixed Miller-Rabin witness set).
bool is_prime(std::uint64_t n);

// Largest prime strictly below n; throws if there is none.
std::uint64_t prev_prime(std::uint64_t n);

// Largest prime below 2^62. Products of two elements fit in 124 bits.
std::uint64_t production_prime();

class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(std::int64_t v) const;
  Element from_uint(std::uint64_t v) const { return v % p_; }
  Element from_bigint(const BigInt& v) const;
  // nullopt when the denominator vanishes mod p
  std::optional<Element> from_rational(const BigRational& v) const;

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool eq(Element a, Element b) const { return a == b; }
  // Elements have no sign in F_p; rendering always uses the representative in [0, p).
  bool is_negative(Element) const { return false; }

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string describe() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_;
};

class RationalField {
 public:
  using Element = BigRational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string describe() const { return "QQ"; }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace ratfield

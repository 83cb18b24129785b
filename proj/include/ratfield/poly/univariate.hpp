#pragma once

#include <utility>
#include <vector>

#include "ratfield/arith/prime_field.hpp"

namespace ratfield {

// Dense univariate polynomial over F_p, coefficients from low to high degree.
class UPoly {
 public:
  using Element = PrimeField::Element;

  explicit UPoly(const PrimeField& f) : f_(f) {}
  UPoly(const PrimeField& f, std::vector<Element> c) : f_(f), c_(std::move(c)) { trim(); }

  static UPoly constant(const PrimeField& f, Element c) { return UPoly(f, {c}); }
  static UPoly x(const PrimeField& f) { return UPoly(f, {0, 1}); }
  // x^k
  static UPoly monomial(const PrimeField& f, std::size_t k, Element c = 1);

  const PrimeField& field() const { return f_; }
  const std::vector<Element>& coeffs() const { return c_; }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Element coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Element lc() const { return c_.empty() ? 0 : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scale(Element s) const;
  UPoly monic() const;

  // quotient and remainder
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  Element evaluate(Element x) const;

  bool operator==(const UPoly& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  PrimeField f_;
  std::vector<Element> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic, or zero if both zero
// base^e mod m
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m);

}  // namespace ratfield

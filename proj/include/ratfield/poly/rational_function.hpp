#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ratfield/poly/gcd.hpp"
#include "ratfield/poly/multipoly.hpp"

namespace ratfield {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Numerator/denominator pair without any normalization. Used on the F_p side,
// where fractions are only evaluated or fed into ideal generators.
template <class F>
struct FracPair {
  MultiPoly<F> num;
  MultiPoly<F> den;

  std::optional<typename F::Element> evaluate(const std::vector<typename F::Element>& pt) const {
    const F& f = num.field();
    auto d = den.evaluate(pt);
    if (f.is_zero(d)) return std::nullopt;
    return f.div(num.evaluate(pt), d);
  }
};

// Coprime numerator/denominator with monic denominator (leading coefficient
// in the ring order equals 1). The zero function is 0/1.
template <class F>
class RatFun {
 public:
  using Poly = MultiPoly<F>;
  using Elem = typename F::Element;

  RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.check_ring(den_);
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
  }
  explicit RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.ring(), num_.field().one())) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr<F>& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFun operator-() const { return RatFun(raw{}, -num_, den_); }
  RatFun operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator*(const RatFun& o) const {
    // cross-cancel first to keep intermediate sizes down
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly a = *exact_divide(num_, g1), d = *exact_divide(o.den_, g1);
    Poly c = *exact_divide(o.num_, g2), b = *exact_divide(den_, g2);
    return RatFun(a * c, b * d);
  }
  RatFun operator/(const RatFun& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * RatFun(raw{}, o.den_, o.num_);
  }
  RatFun reciprocal() const {
    if (is_zero()) throw DivisionByZero();
    return RatFun(den_, num_);
  }
  RatFun pow(std::uint64_t e) const { return RatFun(raw{}, num_.pow(e), den_.pow(e)).renormalized(); }
  RatFun scale(const Elem& c) const { return RatFun(raw{}, num_.scale(c), den_); }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  std::optional<Elem> evaluate(const std::vector<Elem>& pt) const {
    return FracPair<F>{num_, den_}.evaluate(pt);
  }

 private:
  struct raw {};
  RatFun(raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  RatFun renormalized() const {
    RatFun r = *this;
    r.make_monic_den();
    return r;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(num_.ring(), num_.field().one());
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
      }
    }
    make_monic_den();
  }
  void make_monic_den() {
    const F& f = num_.field();
    if (f.is_one(den_.lc())) return;
    Elem s = f.inv(den_.lc());
    num_ = num_.scale(s);
    den_ = den_.scale(s);
  }

  Poly num_, den_;
};

using RationalFunction = RatFun<RationalField>;
using FpFrac = FracPair<PrimeField>;

std::optional<FpFrac> reduce_mod(const RationalFunction& f, const FpRing& target);

// rf_evaluate: image of f at a point of F_p^n; nullopt for a pole or a non-invertible coefficient
std::optional<PrimeField::Element> rf_evaluate(const RationalFunction& f, const FpRing& target,
                                               const std::vector<PrimeField::Element>& pt);

}  // namespace ratfield

#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratfield/arith/prime_field.hpp"
#include "ratfield/poly/monomial.hpp"

namespace ratfield {

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

template <class F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> vars, MonomialOrder order = {})
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {}

  const F& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const PolyRing& o) const {
    return this == &o || (field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_);
  }

 private:
  F field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars, MonomialOrder order = {}) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(vars), order);
}

// degree of the zero polynomial; compares below every real degree
inline constexpr long kNegInfDegree = LONG_MIN;

template <class F>
class MultiPoly {
 public:
  using Field = F;
  using Elem = typename F::Element;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  explicit MultiPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr<F> r, Elem c) {
    MultiPoly p(r);
    if (!r->field().is_zero(c)) p.terms_.push_back({Monomial(r->nvars()), std::move(c)});
    return p;
  }
  static MultiPoly from_int(RingPtr<F> r, std::int64_t c) {
    Elem e = r->field().from_int(c);
    return constant(std::move(r), std::move(e));
  }
  static MultiPoly variable(RingPtr<F> r, std::size_t i) {
    MultiPoly p(r);
    p.terms_.push_back({Monomial::variable(r->nvars(), i), r->field().one()});
    return p;
  }
  static MultiPoly term(RingPtr<F> r, Monomial m, Elem c) {
    MultiPoly p(r);
    if (!r->field().is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  // Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(RingPtr<F> r, std::vector<Term> ts) {
    MultiPoly p(r);
    const auto& ord = r->order();
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    const F& f = r->field();
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
        if (f.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!f.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && field().is_one(terms_[0].coeff); }

  long degree() const {
    long d = kNegInfDegree;
    for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.mono.degree()));
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  const Monomial& lm() const { return terms_.front().mono; }
  const Elem& lc() const { return terms_.front().coeff; }
  Elem constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return field().zero();
  }
  Elem coeff_of(const Monomial& m) const {
    const auto& ord = ring_->order();
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Term& t, const Monomial& x) { return ord.compare(t.mono, x) > 0; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return field().zero();
  }

  // drops the leading term
  MultiPoly tail() const {
    MultiPoly r(ring_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }
  MultiPoly leading_term() const {
    MultiPoly r(ring_);
    if (!terms_.empty()) r.terms_.push_back(terms_.front());
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  MultiPoly operator+(const MultiPoly& o) const { return merge(o, false); }
  MultiPoly operator-(const MultiPoly& o) const { return merge(o, true); }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = merge(o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = merge(o, true); }

  MultiPoly operator*(const MultiPoly& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return MultiPoly(ring_);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    const F& f = field();
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, f.mul(a.coeff, b.coeff)});
    }
    return from_terms(ring_, std::move(prod));
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scale(const Elem& c) const {
    const F& f = field();
    if (f.is_zero(c)) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, c);
    return r;
  }

  // multiplication by c * m keeps the order, so no re-sort is needed
  MultiPoly mul_term(const Monomial& m, const Elem& c) const {
    const F& f = field();
    MultiPoly r(ring_);
    if (f.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
    return r;
  }

  MultiPoly pow(std::uint64_t e) const {
    MultiPoly r = constant(ring_, field().one());
    MultiPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // this - c*m*g, merged in a single pass
  MultiPoly sub_mul(const Elem& c, const Monomial& m, const MultiPoly& g) const {
    const F& f = field();
    const auto& ord = ring_->order();
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial gm;
    bool have = false;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j < g.terms_.size() && !have) {
        gm = g.terms_[j].mono * m;
        have = true;
      }
      int cmp;
      if (i == terms_.size()) cmp = -1;
      else if (j == g.terms_.size()) cmp = 1;
      else cmp = ord.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({std::move(gm), f.neg(f.mul(c, g.terms_[j].coeff))});
        ++j;
        have = false;
      } else {
        Elem v = f.sub(terms_[i].coeff, f.mul(c, g.terms_[j].coeff));
        if (!f.is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
        have = false;
      }
    }
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong length");
    const F& f = field();
    const std::size_t n = nvars();
    // power tables up to the largest exponent of each variable
    std::vector<std::vector<Elem>> pw(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::uint32_t d = degree_in(v);
      pw[v].reserve(d + 1);
      pw[v].push_back(f.one());
      for (std::uint32_t k = 1; k <= d; ++k) pw[v].push_back(f.mul(pw[v].back(), point[v]));
    }
    Elem acc = f.zero();
    for (const auto& t : terms_) {
      Elem x = t.coeff;
      for (std::size_t v = 0; v < n; ++v) {
        if (t.mono[v]) x = f.mul(x, pw[v][t.mono[v]]);
      }
      acc = f.add(acc, x);
    }
    return acc;
  }

  MultiPoly derivative(std::size_t i) const {
    if (i >= nvars()) throw std::out_of_range("derivative variable index");
    const F& f = field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
      std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      Elem c = f.mul(t.coeff, f.from_int(e));
      if (!f.is_zero(c)) out.push_back({std::move(m), std::move(c)});
    }
    // lowering one exponent can reorder terms under degrevlex ties, so re-sort
    return from_terms(ring_, std::move(out));
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scale(field().inv(lc()));
  }

  // Same terms viewed in another ring with the same arity (re-sorted for its order).
  MultiPoly with_ring(const RingPtr<F>& r) const {
    if (r->nvars() != nvars()) throw RingMismatch();
    return from_terms(r, terms_);
  }

  bool operator==(const MultiPoly& o) const {
    if (!ring_->same_as(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    const F& f = field();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].mono != o.terms_[i].mono || !f.eq(terms_[i].coeff, o.terms_[i].coeff)) return false;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  void check_ring(const MultiPoly& o) const {
    if (!ring_->same_as(*o.ring_)) throw RingMismatch();
  }

 private:
  MultiPoly merge(const MultiPoly& o, bool subtract) const {
    check_ring(o);
    const F& f = field();
    const auto& ord = ring_->order();
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size()) cmp = -1;
      else if (j == o.terms_.size()) cmp = 1;
      else cmp = ord.compare(terms_[i].mono, o.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? f.neg(t.coeff) : t.coeff});
      } else {
        Elem v = subtract ? f.sub(terms_[i].coeff, o.terms_[j].coeff) : f.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!f.is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

using QPoly = MultiPoly<RationalField>;
using FpPoly = MultiPoly<PrimeField>;
using QRing = RingPtr<RationalField>;
using FpRing = RingPtr<PrimeField>;

// Image of a Q-polynomial in F_p; nullopt when a coefficient denominator vanishes mod p.
std::optional<FpPoly> reduce_mod(const QPoly& p, const FpRing& target);

FpRing fp_ring_like(const QRing& r, std::uint64_t prime);

// Multiply by the lcm of coefficient denominators and divide by the integer content,
// so the result has coprime integer coefficients; the sign of the leading coefficient is kept.
QPoly primitive_integer_part(const QPoly& p);

}  // namespace ratfield

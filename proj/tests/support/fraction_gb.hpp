#pragma once

// Reference Buchberger over the fraction field Q(x), for small cases only.
// Deliberately naive: every pair, full reduction, no criteria, no tracing.

#include <algorithm>
#include <string>
#include <vector>

#include "ratfield/poly/render.hpp"

namespace ratfield::testing {

class FracField {
 public:
  using Element = RationalFunction;

  explicit FracField(QRing params) : r_(std::move(params)) {}

  Element zero() const { return RationalFunction(QPoly(r_)); }
  Element one() const { return from_int(1); }
  Element from_int(std::int64_t v) const { return RationalFunction(QPoly::from_int(r_, v)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return a.reciprocal(); }
  Element div(const Element& a, const Element& b) const { return a / b; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_one(const Element& a) const { return a == one(); }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  bool is_negative(const Element&) const { return false; }
  std::string to_string(const Element& a) const { return "(" + ratfield::to_string(a) + ")"; }
  std::string describe() const { return "Q(x)"; }
  bool operator==(const FracField& o) const { return r_->same_as(*o.r_); }

  const QRing& params() const { return r_; }

 private:
  QRing r_;
};

using FracPoly = MultiPoly<FracField>;
using FracRing = RingPtr<FracField>;

inline FracPoly make_monic(const FracPoly& p) {
  if (p.is_zero()) return p;
  return p.scale(p.field().inv(p.lc()));
}

// full reduction of f by G
inline FracPoly reduce_full(FracPoly f, const std::vector<FracPoly>& G) {
  const FracField& F = f.field();
  FracPoly rem(f.ring());
  while (!f.is_zero()) {
    bool divided = false;
    for (const auto& g : G) {
      if (g.lm().divides(f.lm())) {
        f = f.sub_mul(F.div(f.lc(), g.lc()), g.lm().quotient_of(f.lm()), g);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem = rem + f.leading_term();
      f = f.tail();
    }
  }
  return rem;
}

inline FracPoly spoly(const FracPoly& a, const FracPoly& b) {
  const FracField& F = a.field();
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  FracPoly x = a.mul_term(a.lm().quotient_of(l), F.inv(a.lc()));
  return x.sub_mul(F.inv(b.lc()), b.lm().quotient_of(l), b);
}

// Reduced Groebner basis, monic, sorted by increasing leading monomial.
inline std::vector<FracPoly> reference_groebner(std::vector<FracPoly> gens) {
  std::vector<FracPoly> G;
  for (auto& g : gens) {
    if (!g.is_zero()) G.push_back(make_monic(g));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    FracPoly h = reduce_full(spoly(G[i], G[j]), G);
    if (h.is_zero()) continue;
    G.push_back(make_monic(h));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // drop redundant leading monomials, then interreduce
  std::vector<FracPoly> min;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].lm().divides(G[i].lm()) && (G[j].lm() != G[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) min.push_back(G[i]);
  }
  std::vector<FracPoly> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<FracPoly> others;
    for (std::size_t j = 0; j < min.size(); ++j) {
      if (j != i) others.push_back(min[j]);
    }
    FracPoly lead = min[i].leading_term();
    out.push_back(make_monic(lead + reduce_full(min[i].tail(), others)));
  }
  MonomialOrder ord = out.empty() ? MonomialOrder{} : out.front().ring()->order();
  std::sort(out.begin(), out.end(), [&](const FracPoly& a, const FracPoly& b) { return ord.less(a.lm(), b.lm()); });
  return out;
}

// Ideal <p_i(y) q_i(x) - q_i(y) p_i(x), t*Q(y) - 1> over Q(x), variables (_t, y...)
// named like the inputs; Q is the lcm of the denominators.
inline std::vector<FracPoly> reference_eoms(const FracRing& ring, const std::vector<RationalFunction>& gens) {
  const QRing& xr = ring->field().params();
  const FracField& F = ring->field();
  auto lift_y = [&](const QPoly& p) {
    std::vector<FracPoly::Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<std::uint32_t> e{0};
      e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
      ts.push_back({Monomial(std::move(e)), RationalFunction(QPoly::constant(xr, t.coeff))});
    }
    return FracPoly::from_terms(ring, std::move(ts));
  };
  auto as_coeff = [&](const QPoly& p) { return FracPoly::constant(ring, RationalFunction(p)); };
  std::vector<FracPoly> out;
  QPoly Q = QPoly::from_int(xr, 1);
  for (const auto& g : gens) {
    out.push_back(lift_y(g.num()) * as_coeff(g.den()) - lift_y(g.den()) * as_coeff(g.num()));
    Q = lcm(Q, g.den());
  }
  FracPoly t = FracPoly::variable(ring, 0);
  out.push_back(t * lift_y(Q) - FracPoly::constant(ring, F.one()));
  return out;
}

}  // namespace ratfield::testing

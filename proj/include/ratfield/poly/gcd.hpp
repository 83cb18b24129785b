#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "ratfield/poly/multipoly.hpp"
#include "ratfield/poly/univariate.hpp"

namespace ratfield {

// Quotient a / b if b divides a exactly, nullopt otherwise.
template <class F>
std::optional<MultiPoly<F>> exact_divide(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  a.check_ring(b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  using P = MultiPoly<F>;
  const F& f = a.field();
  std::vector<typename P::Term> q;
  P r = a;
  const auto binv = f.inv(b.lc());
  while (!r.is_zero()) {
    if (!b.lm().divides(r.lm())) return std::nullopt;
    Monomial t = b.lm().quotient_of(r.lm());
    auto c = f.mul(r.lc(), binv);
    r = r.sub_mul(c, t, b);
    q.push_back({std::move(t), std::move(c)});
  }
  return P::from_terms(a.ring(), std::move(q));
}

namespace detail {

// coefficients of p viewed as a polynomial in variable v; entry k multiplies v^k
template <class F>
std::vector<MultiPoly<F>> coeffs_in(const MultiPoly<F>& p, std::size_t v) {
  using P = MultiPoly<F>;
  std::uint32_t d = p.degree_in(v);
  std::vector<std::vector<typename P::Term>> buckets(d + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    std::uint32_t k = m[v];
    m.set(v, 0);
    buckets[k].push_back({std::move(m), t.coeff});
  }
  std::vector<P> out;
  out.reserve(d + 1);
  for (auto& b : buckets) out.push_back(P::from_terms(p.ring(), std::move(b)));
  return out;
}

template <class F>
MultiPoly<F> lc_in(const MultiPoly<F>& p, std::size_t v) {
  using P = MultiPoly<F>;
  std::uint32_t d = p.degree_in(v);
  std::vector<typename P::Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono[v] != d) continue;
    Monomial m = t.mono;
    m.set(v, 0);
    ts.push_back({std::move(m), t.coeff});
  }
  return P::from_terms(p.ring(), std::move(ts));
}

template <class F>
MultiPoly<F> gcd_rec(const MultiPoly<F>& a, const MultiPoly<F>& b);

// True only if a and b are certainly coprime: for every shared variable the
// univariate images mod p (other variables fixed) have trivial gcd while keeping
// their degree. False means "unknown".
template <class F>
bool coprime_certificate(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  static const PrimeField big(production_prime());
  const PrimeField* pf = &big;
  if constexpr (std::is_same_v<F, PrimeField>) pf = &a.field();
  const PrimeField& fp = *pf;
  const std::size_t n = a.nvars();
  std::vector<std::uint64_t> pt(n);
  for (std::size_t i = 0; i < n; ++i) pt[i] = fp.from_uint(0x9E3779B97F4A7C15ULL * (i + 3));

  auto image = [&](const MultiPoly<F>& p, std::size_t v) -> std::optional<UPoly> {
    std::vector<std::uint64_t> c(p.degree_in(v) + 1, 0);
    for (const auto& t : p.terms()) {
      std::uint64_t x;
      if constexpr (std::is_same_v<F, PrimeField>) {
        x = t.coeff;
      } else {
        auto r = fp.from_rational(t.coeff);
        if (!r) return std::nullopt;
        x = *r;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i != v && t.mono[i]) x = fp.mul(x, fp.pow(pt[i], t.mono[i]));
      }
      c[t.mono[v]] = fp.add(c[t.mono[v]], x);
    }
    UPoly u(fp, std::move(c));
    if (u.degree() != static_cast<long>(p.degree_in(v))) return std::nullopt;
    return u;
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) continue;
    auto ua = image(a, v), ub = image(b, v);
    if (!ua || !ub || gcd(*ua, *ub).degree() > 0) return false;
  }
  return true;
}

template <class F>
MultiPoly<F> content_in(const MultiPoly<F>& p, std::size_t v) {
  auto cs = coeffs_in(p, v);
  MultiPoly<F> g(p.ring());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

template <class F>
MultiPoly<F> prem_in(MultiPoly<F> r, const MultiPoly<F>& b, std::size_t v) {
  const std::uint32_t db = b.degree_in(v);
  const MultiPoly<F> lb = lc_in(b, v);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    std::uint32_t k = r.degree_in(v) - db;
    MultiPoly<F> lr = lc_in(r, v);
    r = r * lb - (lr * b).mul_term(Monomial::variable(r.nvars(), v, k), r.field().one());
  }
  return r;
}

template <class F>
MultiPoly<F> primitive_in(const MultiPoly<F>& p, std::size_t v) {
  auto c = content_in(p, v);
  auto q = exact_divide(p, c);
  return q->monic();
}

template <class F>
MultiPoly<F> gcd_rec(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  using P = MultiPoly<F>;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return P::constant(a.ring(), a.field().one());
  if (coprime_certificate(a, b)) return P::constant(a.ring(), a.field().one());
  const std::size_t n = a.nvars();
  // a variable occurring on one side only can be eliminated by taking contents
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_a = a.degree_in(v) > 0, in_b = b.degree_in(v) > 0;
    if (in_a == in_b) continue;
    const P& with = in_a ? a : b;
    P g = in_a ? b : a;
    for (const auto& c : coeffs_in(with, v)) {
      if (c.is_zero()) continue;
      g = gcd_rec(g, c);
      if (g.is_constant()) break;
    }
    return g.monic();
  }
  std::size_t v = 0;
  while (v < n && a.degree_in(v) == 0) ++v;
  P ca = content_in(a, v), cb = content_in(b, v);
  P c = gcd_rec(ca, cb);
  P pa = exact_divide(a, ca)->monic();
  P pb = exact_divide(b, cb)->monic();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  P g(a.ring());
  while (true) {
    P r = prem_in(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = P::constant(a.ring(), a.field().one());
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  g = primitive_in(g, v);
  return (c * g).monic();
}

}  // namespace detail

// Greatest common divisor with leading coefficient 1 (in the ring's order).
template <class F>
MultiPoly<F> gcd(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  a.check_ring(b);
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  return detail::gcd_rec(a, b);
}

inline QPoly gcd_q(const QPoly& a, const QPoly& b) { return gcd(a, b); }

template <class F>
MultiPoly<F> lcm(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly<F>(a.ring());
  auto g = gcd(a, b);
  return (*exact_divide(a, g) * b).monic();
}

}  // namespace ratfield

#include "ratfield/interp/cauchy.hpp"

#include <stdexcept>

namespace ratfield {

MultiBlackbox as_multi(const BlackboxFn& bb) {
  auto fn = bb.eval;
  return MultiBlackbox{bb.arity, 1, [fn](const FpVec& x) -> std::optional<FpVec> {
                         auto v = fn(x);
                         if (!v) return std::nullopt;
                         return FpVec{*v};
                       }};
}

AdmissibleRatio admissible_ratio(const PrimeField& f, std::size_t count) {
  AdmissibleRatio r;
  for (std::uint64_t c = 2; r.primes.size() < count; ++c) {
    bool prime = true;
    for (auto q : r.primes) {
      if (q * q > c) break;
      if (c % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) r.primes.push_back(c);
  }
  for (auto q : r.primes) r.omega.push_back(f.from_uint(q));
  return r;
}

bool exponents_recoverable(const PrimeField& f, std::size_t count, unsigned d) {
  auto r = admissible_ratio(f, count);
  unsigned __int128 v = 1;
  for (unsigned k = 0; k < d; ++k) {
    v *= r.primes.back();
    if (v >= f.modulus()) return false;
  }
  return true;
}

UPoly interpolate_poly(const PrimeField& f, const FpVec& x, const FpVec& y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw std::invalid_argument("interpolation data length mismatch");
  FpVec c = y;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = f.div(f.sub(c[i], c[i - 1]), f.sub(x[i], x[i - j]));
      if (i == j) break;
    }
  }
  UPoly p(f);
  for (std::size_t i = n; i-- > 0;) {
    p = p * UPoly(f, {f.neg(x[i]), 1}) + UPoly::constant(f, c[i]);
  }
  return p;
}

namespace {

UPoly vanishing(const PrimeField& f, const FpVec& x) {
  UPoly m = UPoly::constant(f, 1);
  for (auto u : x) m = m * UPoly(f, {f.neg(u), 1});
  return m;
}

// checks the pair against the data and normalizes it
std::optional<std::pair<UPoly, UPoly>> finalize(const PrimeField& f, UPoly a, UPoly b, const FpVec& x,
                                                const FpVec& y) {
  if (b.is_zero()) return std::nullopt;
  UPoly g = gcd(a, b);
  if (g.degree() > 0) {
    a = a / g;
    b = b / g;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    Fp bv = b.evaluate(x[i]);
    if (bv == 0) return std::nullopt;
    if (a.evaluate(x[i]) != f.mul(bv, y[i])) return std::nullopt;
  }
  Fp s = f.inv(b.lc());
  return std::make_pair(a.scale(s), b.scale(s));
}

}  // namespace

std::optional<std::pair<UPoly, UPoly>> cauchy_interpolate(const PrimeField& f, const FpVec& x, const FpVec& y,
                                                          unsigned da, unsigned db) {
  if (x.size() != y.size()) throw std::invalid_argument("interpolation data length mismatch");
  if (x.size() < static_cast<std::size_t>(da) + db + 1) return std::nullopt;
  UPoly r0 = vanishing(f, x), r1 = interpolate_poly(f, x, y);
  UPoly t0(f), t1 = UPoly::constant(f, 1);
  while (r1.degree() > static_cast<long>(da)) {
    auto [q, r] = r0.divmod(r1);
    UPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (t1.degree() > static_cast<long>(db)) return std::nullopt;
  return finalize(f, r1, t1, x, y);
}

std::optional<std::pair<UPoly, UPoly>> mqrfr_interpolate(const PrimeField& f, const FpVec& x, const FpVec& y) {
  UPoly r0 = vanishing(f, x), r1 = interpolate_poly(f, x, y);
  if (r1.is_zero()) return std::make_pair(UPoly(f), UPoly::constant(f, 1));
  UPoly t0(f), t1 = UPoly::constant(f, 1);
  long best_gap = -1;
  std::pair<UPoly, UPoly> best{UPoly(f), UPoly(f)};
  while (!r1.is_zero()) {
    long gap = r0.degree() - r1.degree();
    if (gap > best_gap) {
      best_gap = gap;
      best = {r1, t1};
    }
    auto [q, r] = r0.divmod(r1);
    UPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (best_gap < 2) return std::nullopt;
  return finalize(f, best.first, best.second, x, y);
}

}  // namespace ratfield

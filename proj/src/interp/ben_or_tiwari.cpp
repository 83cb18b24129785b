#include "ratfield/interp/ben_or_tiwari.hpp"

#include <algorithm>

#include "ratfield/poly/univariate.hpp"

namespace ratfield {

std::string to_string(BotStatus s) {
  switch (s) {
    case BotStatus::Ok: return "ok";
    case BotStatus::Degenerate: return "degenerate Pade step";
    case BotStatus::NoSplit: return "Lambda does not split";
    case BotStatus::RootNotSmooth: return "root not smooth";
    case BotStatus::Inconsistent: return "inconsistent evaluations";
  }
  return "?";
}

namespace {

void split_into(const UPoly& g, Rng& rng, FpVec& out) {
  const PrimeField& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(f.neg(f.div(g.coeff(0), g.coeff(1))));
    return;
  }
  const std::uint64_t half = (f.modulus() - 1) / 2;
  while (true) {
    UPoly shift(f, {rng.below(f.modulus()), 1});
    UPoly h = gcd(g, powmod(shift, half, g) - UPoly::constant(f, 1));
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_into(h, rng, out);
      split_into(g / h, rng, out);
      return;
    }
  }
}

}  // namespace

std::optional<FpVec> split_roots(const UPoly& f_in, Rng& rng) {
  if (f_in.degree() < 1) return FpVec{};
  const PrimeField& f = f_in.field();
  UPoly g = f_in.monic();
  // product of the distinct linear factors
  UPoly xp = powmod(UPoly::x(f), f.modulus(), g);
  UPoly lin = gcd(g, xp - UPoly::x(f));
  if (lin.degree() != g.degree()) return std::nullopt;
  FpVec roots;
  split_into(lin, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

BenOrTiwariResult ben_or_tiwari(const FpRing& ring, const FpVec& a, const AdmissibleRatio& ratio,
                                unsigned degree_bound, Rng& rng) {
  const PrimeField& f = ring->field();
  const std::size_t n = ring->nvars();
  if (ratio.primes.size() != n) throw std::invalid_argument("ratio length differs from ring arity");
  FpPoly zero(ring);
  if (a.size() % 2 != 0 || a.empty()) throw std::invalid_argument("need 2T evaluations");
  const std::size_t T = a.size() / 2;
  if (std::all_of(a.begin(), a.end(), [](Fp v) { return v == 0; })) return {BotStatus::Ok, zero};

  // Pade approximation of sum a_i z^i modulo z^{2T}
  UPoly r0 = UPoly::monomial(f, 2 * T), r1(f, a);
  UPoly t0(f), t1 = UPoly::constant(f, 1);
  while (r1.degree() >= static_cast<long>(T)) {
    auto [q, r] = r0.divmod(r1);
    UPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  const UPoly& lambda = t1;
  const long t = lambda.degree();
  if (t < 1 || t > static_cast<long>(T) || lambda.coeff(0) == 0) return {BotStatus::Degenerate, zero};

  auto roots = split_roots(lambda, rng);
  if (!roots || roots->size() != static_cast<std::size_t>(t)) return {BotStatus::NoSplit, zero};

  // roots are the inverses of the term values prod(omega^alpha)
  std::vector<Monomial> monos;
  FpVec b;
  for (Fp rho : *roots) {
    std::uint64_t v = f.inv(rho);
    Monomial m(n);
    for (std::size_t k = 0; k < n && v > 1; ++k) {
      std::uint32_t e = 0;
      while (v % ratio.primes[k] == 0) {
        v /= ratio.primes[k];
        ++e;
      }
      m.set(k, e);
    }
    if (v != 1 || m.degree() > degree_bound) return {BotStatus::RootNotSmooth, zero};
    monos.push_back(std::move(m));
    b.push_back(f.inv(rho));
  }

  // transposed Vandermonde: sum_k c_k b_k^i = a_i for i < t
  const std::size_t tt = static_cast<std::size_t>(t);
  UPoly P = UPoly::constant(f, 1);
  for (Fp bk : b) P = P * UPoly(f, {f.neg(bk), 1});
  FpVec c(tt);
  for (std::size_t k = 0; k < tt; ++k) {
    // q = P / (z - b_k) by synthetic division
    FpVec q(tt);
    Fp carry = P.coeff(tt);
    for (std::size_t i = tt; i-- > 0;) {
      q[i] = carry;
      carry = f.add(P.coeff(i), f.mul(carry, b[k]));
    }
    Fp num = 0;
    for (std::size_t i = 0; i < tt; ++i) num = f.add(num, f.mul(q[i], a[i]));
    Fp den = UPoly(f, q).evaluate(b[k]);
    c[k] = f.div(num, den);
    if (c[k] == 0) return {BotStatus::Inconsistent, zero};
  }

  // the remaining evaluations must agree
  FpVec pw(tt, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Fp s = 0;
    for (std::size_t k = 0; k < tt; ++k) {
      s = f.add(s, f.mul(c[k], pw[k]));
      pw[k] = f.mul(pw[k], b[k]);
    }
    if (s != a[i]) return {BotStatus::Inconsistent, zero};
  }

  std::vector<FpPoly::Term> terms;
  for (std::size_t k = 0; k < tt; ++k) terms.push_back({monos[k], c[k]});
  return {BotStatus::Ok, FpPoly::from_terms(ring, std::move(terms))};
}

}  // namespace ratfield

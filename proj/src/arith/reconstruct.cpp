#include "ratfield/arith/reconstruct.hpp"

namespace ratfield {

std::optional<BigRational> rational_reconstruct(const BigInt& r_in, const BigInt& m) {
  BigInt r = r_in % m;
  if (r < 0) r += m;
  if (r == 0) return BigRational(0);

  BigInt bound = m / 2;
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());

  BigInt r0 = m, r1 = r;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  BigInt b = abs(t1);
  if (b == 0 || b > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  BigInt a = sgn(t1) < 0 ? BigInt(-r1) : r1;
  BigRational out(a, b);
  out.canonicalize();
  return out;
}

std::pair<BigInt, BigInt> crt_pair(const BigInt& r1, const BigInt& m1,
                                   const BigInt& r2, const BigInt& m2) {
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw NonCoprimeModuli();
  BigInt m = m1 * m2;
  // r = r1 + m1 * ((r2 - r1) * s mod m2), with s = m1^{-1} mod m2
  BigInt k = ((r2 - r1) * s) % m2;
  if (k < 0) k += m2;
  BigInt r = (r1 + m1 * k) % m;
  if (r < 0) r += m;
  return {r, m};
}

}  // namespace ratfield

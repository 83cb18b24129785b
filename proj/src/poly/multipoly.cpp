#include "ratfield/poly/multipoly.hpp"

#include "ratfield/poly/rational_function.hpp"
#include "ratfield/poly/render.hpp"

namespace ratfield {

std::optional<FpPoly> reduce_mod(const QPoly& p, const FpRing& target) {
  if (target->nvars() != p.nvars()) throw RingMismatch();
  const PrimeField& f = target->field();
  std::vector<FpPoly::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    auto c = f.from_rational(t.coeff);
    if (!c) return std::nullopt;
    ts.push_back({t.mono, *c});
  }
  return FpPoly::from_terms(target, std::move(ts));
}

FpRing fp_ring_like(const QRing& r, std::uint64_t prime) {
  return make_ring(PrimeField(prime), r->vars(), r->order());
}

QPoly primitive_integer_part(const QPoly& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  BigRational s(den_lcm, num_gcd);
  s.canonicalize();
  return p.scale(s);
}

std::optional<FpFrac> reduce_mod(const RationalFunction& f, const FpRing& target) {
  auto n = reduce_mod(f.num(), target);
  auto d = reduce_mod(f.den(), target);
  if (!n || !d || d->is_zero()) return std::nullopt;
  return FpFrac{std::move(*n), std::move(*d)};
}

std::optional<PrimeField::Element> rf_evaluate(const RationalFunction& f, const FpRing& target,
                                               const std::vector<PrimeField::Element>& pt) {
  auto img = reduce_mod(f, target);
  if (!img) return std::nullopt;
  return img->evaluate(pt);
}

std::string render_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace ratfield

namespace ratfield {

std::string to_string(const RationalFunction& r) {
  if (r.den().is_constant()) return to_string(r.num());
  QPoly d = primitive_integer_part(r.den());
  BigRational s = d.lc() / r.den().lc();
  return render_fraction(r.num().scale(s), d);
}

}  // namespace ratfield

#include "ratfield/oms/eoms.hpp"

#include "ratfield/poly/gcd.hpp"

namespace ratfield {

FpPoly embed_y(const FpPoly& p, const FpRing& ring) {
  if (ring->nvars() != p.nvars() + 1) throw RingMismatch();
  std::vector<FpPoly::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e{0};
    e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return FpPoly::from_terms(ring, std::move(ts));
}

FpPoly project_x(const FpPoly& p, const FpRing& xring) {
  if (p.nvars() != xring->nvars() + 1) throw RingMismatch();
  std::vector<FpPoly::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    if (t.mono[0] != 0) throw std::invalid_argument("project_x: polynomial involves t");
    std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    ts.push_back({Monomial(std::move(e)), t.coeff});
  }
  return FpPoly::from_terms(xring, std::move(ts));
}

EomsTemplate make_eoms(const FpGenerators& g, MonomialOrder order) {
  const PrimeField& f = g.ring->field();
  std::vector<std::string> names{"_t"};
  for (const auto& v : g.ring->vars()) names.push_back(v);
  EomsTemplate e{g.ring, make_ring(f, names, order), g.gens, {}, {}, FpPoly(g.ring)};
  FpPoly q = FpPoly::from_int(g.ring, 1);
  for (const auto& gen : g.gens) {
    e.ynum.push_back(embed_y(gen.num, e.ring));
    e.yden.push_back(embed_y(gen.den, e.ring));
    q = lcm(q, gen.den);
  }
  e.saturation = FpPoly::variable(e.ring, 0) * embed_y(q, e.ring) - FpPoly::from_int(e.ring, 1);
  return e;
}

std::optional<IdealSpec> specialize_eoms(const EomsTemplate& e, const FpVec& a) {
  IdealSpec spec{e.ring, {}};
  spec.gens.reserve(e.gens.size() + 1);
  for (std::size_t i = 0; i < e.gens.size(); ++i) {
    Fp qa = e.gens[i].den.evaluate(a);
    // Q(a) = 0 forces some q_i(a) = 0, so this also covers the saturation polynomial
    if (qa == 0) return std::nullopt;
    Fp pa = e.gens[i].num.evaluate(a);
    spec.gens.push_back(e.ynum[i].scale(qa) - e.yden[i].scale(pa));
  }
  spec.gens.push_back(e.saturation);
  return spec;
}

}  // namespace ratfield

#pragma once

#include <optional>
#include <vector>

#include "ratfield/groebner/groebner.hpp"
#include "ratfield/interp/blackbox.hpp"
#include "ratfield/oms/generator_set.hpp"

namespace ratfield {

// The extended OMS ideal with parameters x left symbolic:
//   p_i(y) q_i(x) - q_i(y) p_i(x),  t Q(y) - 1   in F_p(x)[t, y1..yn]
// The Rabinowitsch variable t is variable 0, hence the greatest.
struct EomsTemplate {
  FpRing xring;
  FpRing ring;
  std::vector<FpFrac> gens;        // over xring
  std::vector<FpPoly> ynum, yden;  // the same polynomials over ring
  FpPoly saturation;               // t Q(y) - 1
};

EomsTemplate make_eoms(const FpGenerators& g, MonomialOrder order = {});

// x_i -> y_i
FpPoly embed_y(const FpPoly& p, const FpRing& eoms_ring);
// y_i -> x_i; the polynomial must not involve t
FpPoly project_x(const FpPoly& p, const FpRing& xring);

// Specialization x -> a. Only the substituted values are computed, so each
// generator has as many terms as p_i and q_i together. nullopt at a pole.
std::optional<IdealSpec> specialize_eoms(const EomsTemplate& e, const FpVec& a);

}  // namespace ratfield

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ratfield/poly/multipoly.hpp"

namespace ratfield {

// Generators over F_p; the ring carries the monomial order.
struct IdealSpec {
  FpRing ring;
  std::vector<FpPoly> gens;
};

// Monic, interreduced, sorted by increasing leading monomial.
struct ReducedGB {
  FpRing ring;
  std::vector<FpPoly> basis;

  bool is_unit() const { return basis.size() == 1 && basis[0].is_one(); }
  bool operator==(const ReducedGB& o) const { return basis == o.basis; }
};

struct GroebnerTrace {
  struct Step {
    std::uint32_t i, j;
    bool zero;     // reduced to zero during learn; skipped by apply
    Monomial lm;   // leading monomial of the new element otherwise
  };
  std::vector<std::size_t> kept_inputs;  // input positions surviving zero removal and dedup
  std::vector<Monomial> input_lms;
  std::vector<Step> steps;
  std::vector<std::uint32_t> survivors;  // working-list indices forming the minimal basis
  std::vector<std::vector<Monomial>> shape;  // supports of the final basis

  std::size_t zero_reductions() const;
};

ReducedGB groebner(const IdealSpec& spec);
std::pair<ReducedGB, GroebnerTrace> gb_learn(const IdealSpec& spec);
// nullopt signals TRACE_DIVERGED
std::optional<ReducedGB> gb_apply(const IdealSpec& spec, const GroebnerTrace& trace);

FpPoly normal_form(const FpPoly& p, const ReducedGB& gb);
// normal form with its constant term removed
FpPoly nf_plus(const FpPoly& p, const ReducedGB& gb);

FpPoly s_polynomial(const FpPoly& f, const FpPoly& g);

}  // namespace ratfield

#pragma once

#include <optional>
#include <utility>

#include "ratfield/interp/blackbox.hpp"
#include "ratfield/poly/univariate.hpp"

namespace ratfield {

// Interpolating polynomial of degree < points.size() (Newton form converted to coefficients).
UPoly interpolate_poly(const PrimeField& f, const FpVec& points, const FpVec& values);

// Coprime (A, B) with deg A <= da, deg B <= db, B monic and A(u) = B(u) v at every
// sample; nullopt when no such pair exists.
std::optional<std::pair<UPoly, UPoly>> cauchy_interpolate(const PrimeField& f, const FpVec& points,
                                                          const FpVec& values, unsigned da, unsigned db);

// Degree-free variant: picks the EEA step with the largest quotient degree.
// Needs at least one spare sample beyond the true degrees to be convincing.
std::optional<std::pair<UPoly, UPoly>> mqrfr_interpolate(const PrimeField& f, const FpVec& points,
                                                         const FpVec& values);

}  // namespace ratfield

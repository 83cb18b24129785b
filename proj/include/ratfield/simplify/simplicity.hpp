#pragma once

#include <string>

#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

// For a/b with deg a >= deg b (reciprocal taken otherwise).
struct SimplicityKey {
  unsigned degree_sum;
  std::size_t terms;
  unsigned den_degree;

  auto operator<=>(const SimplicityKey&) const = default;
};

SimplicityKey simplicity_key(const RationalFunction& f);

// <0 when f is simpler than g. After the key, ties go to the largest monomial
// occurring in only one numerator (the side holding it is the more complex
// one), then the same test on denominators, then the rendered text.
int simplicity_compare(const RationalFunction& f, const RationalFunction& g);

// Representative of f up to the field-preserving moves c*f, f + c and 1/f:
// integer coprime numerator and denominator, both primitive with positive
// leading coefficient, deg num >= deg den, and no constant term when f is a
// polynomial. Constants map to 1.
RationalFunction canonical_form(const RationalFunction& f);

}  // namespace ratfield

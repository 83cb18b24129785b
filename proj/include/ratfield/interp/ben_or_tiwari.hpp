#pragma once

#include <string>

#include "ratfield/arith/random.hpp"
#include "ratfield/interp/blackbox.hpp"
#include "ratfield/poly/multipoly.hpp"
#include "ratfield/poly/univariate.hpp"

namespace ratfield {

enum class BotStatus {
  Ok,
  Degenerate,     // no usable Pade denominator: the term bound is too small
  NoSplit,        // Lambda does not split into distinct linear factors over F_p
  RootNotSmooth,  // an inverted root is not a product of the ratio primes within the degree bound
  Inconsistent,   // recovered terms disagree with the remaining evaluations
};

struct BenOrTiwariResult {
  BotStatus status;
  FpPoly poly;
};

std::string to_string(BotStatus s);

// evals[i] = f(omega^i) for i < 2T. The ring arity must equal the ratio length.
BenOrTiwariResult ben_or_tiwari(const FpRing& ring, const FpVec& evals, const AdmissibleRatio& ratio,
                                unsigned degree_bound, Rng& rng);

// distinct roots of a squarefree, fully split polynomial; nullopt otherwise
std::optional<FpVec> split_roots(const UPoly& f, Rng& rng);

}  // namespace ratfield

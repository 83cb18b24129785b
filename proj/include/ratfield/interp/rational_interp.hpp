#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratfield/arith/random.hpp"
#include "ratfield/interp/blackbox.hpp"
#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

struct DegreePair {
  unsigned num = 0;
  unsigned den = 0;
  bool operator==(const DegreePair& o) const { return num == o.num && den == o.den; }
};

enum class DegreeStatus { Ok, Stopped, Fail };

struct DegreeEstimate {
  DegreeStatus status = DegreeStatus::Fail;
  DegreePair deg;
};

struct RationalInterpResult {
  bool ok = false;
  std::optional<FpFrac> value;  // numerator / monic denominator when ok
  std::string reason;           // why it failed otherwise
};

// Numerator and denominator total degrees of each output, restricted to a random
// line u -> gamma*u + sigma. Outputs whose degree sum exceeds d are STOPPED.
std::vector<DegreeEstimate> estimate_degrees_batch(const MultiBlackbox& bb, unsigned d, const PrimeField& f,
                                                   Rng& rng, InterpStats* stats = nullptr,
                                                   const InterpOptions& opts = {});

DegreeEstimate estimate_degrees(const BlackboxFn& bb, unsigned d, const PrimeField& f, Rng& rng,
                                InterpStats* stats = nullptr);

// Sparse interpolation of every output k with wanted[k] set, given exact degrees.
// All outputs share the evaluation grid; `ring` names the n variables.
std::vector<RationalInterpResult> interpolate_rational_batch(const MultiBlackbox& bb,
                                                             const std::vector<DegreePair>& degrees,
                                                             const std::vector<bool>& wanted, const FpRing& ring,
                                                             Rng& rng, InterpStats* stats = nullptr,
                                                             const InterpOptions& opts = {});

RationalInterpResult interpolate_rational(const BlackboxFn& bb, DegreePair degrees, const FpRing& ring, Rng& rng,
                                          InterpStats* stats = nullptr, const InterpOptions& opts = {});

}  // namespace ratfield

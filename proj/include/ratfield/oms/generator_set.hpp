#pragma once

#include <optional>
#include <vector>

#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

// Generators of a subfield of F_p(x); pairs need not be reduced.
struct FpGenerators {
  FpRing ring;
  std::vector<FpFrac> gens;
};

// Generators of a subfield of Q(x1..xn), deduplicated, with the lcm of the
// denominators cached.
class GeneratorSet {
 public:
  GeneratorSet(QRing ring, std::vector<RationalFunction> gens);

  const QRing& ring() const { return ring_; }
  const std::vector<RationalFunction>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const QPoly& lcm_den() const { return q_; }

  // images modulo p; nullopt when a denominator vanishes or a coefficient has p in its denominator
  std::optional<FpGenerators> modulo(std::uint64_t prime) const;

 private:
  QRing ring_;
  std::vector<RationalFunction> gens_;
  QPoly q_;
};

}  // namespace ratfield

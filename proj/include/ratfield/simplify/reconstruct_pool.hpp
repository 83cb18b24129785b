#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

struct ModImage {
  std::uint64_t prime;
  FpFrac value;  // monic denominator, so images at different primes line up
};

enum class ReconstructStatus { Ok, NeedMorePrimes, Inconsistent };

struct ReconstructResult {
  ReconstructStatus status;
  std::optional<RationalFunction> value;
};

// Lifts a candidate from its images: CRT across the primes, then rational
// reconstruction coefficient by coefficient. Images with different supports
// are Inconsistent.
ReconstructResult reconstruct_candidate(const std::vector<ModImage>& images, const QRing& ring);

}  // namespace ratfield

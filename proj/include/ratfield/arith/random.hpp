#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ratfield/arith/prime_field.hpp"

namespace ratfield {

// Seeded stream used by every randomized routine. The reduction below is
// written out so draws do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  PrimeField::Element nonzero(const PrimeField& f) { return 1 + below(f.modulus() - 1); }

  std::vector<PrimeField::Element> nonzero_point(const PrimeField& f, std::size_t n) {
    std::vector<PrimeField::Element> v(n);
    for (auto& x : v) x = nonzero(f);
    return v;
  }

  // independent child stream, so callers can hand out sub-seeds deterministically
  Rng split() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ratfield

#include "ratfield/oms/generator_set.hpp"

#include "ratfield/poly/gcd.hpp"

namespace ratfield {

GeneratorSet::GeneratorSet(QRing ring, std::vector<RationalFunction> gens)
    : ring_(std::move(ring)), q_(QPoly::from_int(ring_, 1)) {
  for (auto& g : gens) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatch();
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end()) continue;
    q_ = lcm(q_, g.den());
    gens_.push_back(std::move(g));
  }
}

std::optional<FpGenerators> GeneratorSet::modulo(std::uint64_t prime) const {
  FpGenerators out{fp_ring_like(ring_, prime), {}};
  for (const auto& g : gens_) {
    auto r = reduce_mod(g, out.ring);
    if (!r) return std::nullopt;
    out.gens.push_back(std::move(*r));
  }
  return out;
}

}  // namespace ratfield

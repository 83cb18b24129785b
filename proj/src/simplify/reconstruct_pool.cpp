#include "ratfield/simplify/reconstruct_pool.hpp"

#include "ratfield/arith/reconstruct.hpp"

namespace ratfield {

namespace {

bool same_support(const FpPoly& a, const FpPoly& b) {
  if (a.num_terms() != b.num_terms()) return false;
  for (std::size_t i = 0; i < a.num_terms(); ++i) {
    if (a.terms()[i].mono != b.terms()[i].mono) return false;
  }
  return true;
}

std::optional<QPoly> lift(const std::vector<ModImage>& images, bool numerator, const QRing& ring) {
  const FpPoly& first = numerator ? images[0].value.num : images[0].value.den;
  std::vector<QPoly::Term> ts;
  for (std::size_t k = 0; k < first.num_terms(); ++k) {
    BigInt r = 0, m = 1;
    for (const auto& img : images) {
      const FpPoly& p = numerator ? img.value.num : img.value.den;
      std::tie(r, m) = crt_pair(r, m, BigInt(static_cast<unsigned long>(p.terms()[k].coeff)),
                                BigInt(static_cast<unsigned long>(img.prime)));
    }
    auto q = rational_reconstruct(r, m);
    if (!q) return std::nullopt;
    ts.push_back({first.terms()[k].mono, *q});
  }
  return QPoly::from_terms(ring, std::move(ts));
}

}  // namespace

ReconstructResult reconstruct_candidate(const std::vector<ModImage>& images, const QRing& ring) {
  if (images.empty()) return {ReconstructStatus::NeedMorePrimes, std::nullopt};
  for (const auto& img : images) {
    if (!same_support(img.value.num, images[0].value.num) || !same_support(img.value.den, images[0].value.den)) {
      return {ReconstructStatus::Inconsistent, std::nullopt};
    }
  }
  auto num = lift(images, true, ring);
  auto den = lift(images, false, ring);
  if (!num || !den || den->is_zero()) return {ReconstructStatus::NeedMorePrimes, std::nullopt};
  return {ReconstructStatus::Ok, RationalFunction(*num, *den)};
}

}  // namespace ratfield

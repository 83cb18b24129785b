#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ratfield/arith/prime_field.hpp"

namespace ratfield {

using Fp = PrimeField::Element;
using FpVec = std::vector<Fp>;

// A function F_p^n -> F_p that may refuse a point (FAIL = nullopt).
struct BlackboxFn {
  std::size_t arity = 0;
  std::function<std::optional<Fp>(const FpVec&)> eval;
};

// Several functions sharing one evaluation per point (one Groebner basis
// feeds every coefficient). A FAIL applies to all outputs at that point.
struct MultiBlackbox {
  std::size_t arity = 0;
  std::size_t outputs = 0;
  std::function<std::optional<FpVec>(const FpVec&)> eval;
};

MultiBlackbox as_multi(const BlackboxFn& bb);

// The first `count` primes (2, 3, 5, ...) viewed as field elements.
struct AdmissibleRatio {
  std::vector<std::uint64_t> primes;
  FpVec omega;
};

AdmissibleRatio admissible_ratio(const PrimeField& f, std::size_t count);

// true when every monomial of total degree <= d in `count` variables has a value
// prod(primes^alpha) below p, so exponents are recoverable by trial division
bool exponents_recoverable(const PrimeField& f, std::size_t count, unsigned d);

struct InterpStats {
  std::size_t evaluations = 0;
  std::size_t failed_points = 0;
};

struct InterpOptions {
  std::size_t eval_cap = 1000000;
};

}  // namespace ratfield

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "ratfield/arith/prime_field.hpp"

namespace ratfield {

struct NonCoprimeModuli : std::domain_error {
  NonCoprimeModuli() : std::domain_error("CRT moduli are not coprime") {}
};

// Wang reconstruction with |a|, b <= sqrt(m/2). nullopt means more primes are needed.
std::optional<BigRational> rational_reconstruct(const BigInt& r, const BigInt& m);

// Returns (r, m1*m2) with r = r1 mod m1, r = r2 mod m2, 0 <= r < m1*m2.
std::pair<BigInt, BigInt> crt_pair(const BigInt& r1, const BigInt& m1,
                                   const BigInt& r2, const BigInt& m2);

}  // namespace ratfield

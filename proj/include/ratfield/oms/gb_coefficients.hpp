#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ratfield/interp/rational_interp.hpp"
#include "ratfield/oms/eoms.hpp"

namespace ratfield {

struct EvaluationBudgetExceeded : std::runtime_error {
  EvaluationBudgetExceeded() : std::runtime_error("evaluation budget exceeded") {}
};

struct CoefficientEntry {
  Monomial lead;  // leading monomial of the basis element
  Monomial mono;  // monomial carrying this coefficient
  std::optional<DegreePair> degrees;  // unknown when the estimate hit the cutoff first
  bool high_degree = false;     // degree sum above the cutoff
  std::optional<FpFrac> value;  // set exactly when !high_degree
};

struct CoefficientReport {
  std::size_t basis_size = 0;
  std::vector<CoefficientEntry> entries;  // non-leading terms, basis order
  std::size_t gb_evaluations = 0;
  std::size_t failed_points = 0;
  std::size_t divergences = 0;
  std::size_t attempts = 0;

  // interpolated values that are not constants
  std::vector<FpFrac> nonconstant_values() const;
  bool complete() const;
};

struct GbCoefficientOptions {
  InterpOptions interp;
  std::size_t attempts = 3;        // fresh randomness after a FAIL
  std::size_t relearn_after = 3;   // consecutive trace divergences
};

// Coefficients of the reduced Groebner basis of the eOMS ideal over F_p(x) whose
// numerator and denominator degrees sum to at most d; the rest are flagged.
// nullopt when every attempt failed. Throws EvaluationBudgetExceeded.
std::optional<CoefficientReport> gb_coefficients(const EomsTemplate& e, unsigned d, Rng& rng,
                                                 const GbCoefficientOptions& opts = {});

}  // namespace ratfield

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratfield/oms/generator_set.hpp"
#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SimplifyConfig {
  std::vector<MonomialOrder> orders{MonomialOrder{OrderKind::DegRevLex}};  // coefficient pools are unioned
  unsigned delta = 3;
  double epsilon = 0.01;
  bool minimize = false;
  bool retain_originals = true;
  bool final_check = true;
  std::uint64_t seed = 1;
  std::size_t eval_cap = 1000000;
  unsigned max_degree = 64;   // last d of the doubling schedule
  unsigned check_primes = 2;  // independent primes for the final check
  unsigned crt_primes = 4;    // extra primes tried when reconstruction needs them
  unsigned max_restarts = 3;

  void validate() const;
};

struct RoundRecord {
  unsigned d;
  std::size_t n_coeffs;
  std::size_t n_evals;
  bool equal;
};

struct PoolEntry {
  std::string expr;
  std::string provenance;  // original, gb-coefficient or polynomial
};

struct SimplificationReport {
  std::vector<std::string> variables;
  std::vector<std::string> input;
  SimplifyConfig config;
  bool sampling_bound_met = true;
  std::vector<RoundRecord> rounds;
  bool used_originals_for_polynomials = false;
  std::vector<PoolEntry> pool;
  std::vector<std::string> sorted;
  std::vector<std::string> output;
  bool minimized = false;
  std::size_t jacobian_rank = 0;
  bool dependent = false;
  bool verified = false;
  std::uint64_t working_prime = 0;
  std::vector<std::uint64_t> check_primes;
  unsigned restarts = 0;
  std::vector<std::string> warnings;

  std::string to_json() const;  // stable key order, no timings
};

struct SimplifyResult {
  std::vector<RationalFunction> generators;
  SimplificationReport report;
};

struct VerificationFailed : std::runtime_error {
  explicit VerificationFailed(SimplificationReport r)
      : std::runtime_error("final field equality check failed"), report(std::make_shared<SimplificationReport>(std::move(r))) {}
  std::shared_ptr<SimplificationReport> report;
};

// Throws ConfigError, EvaluationBudgetExceeded or VerificationFailed.
SimplifyResult simplify(const GeneratorSet& gens, const SimplifyConfig& cfg = {});

}  // namespace ratfield

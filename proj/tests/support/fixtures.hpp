#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ratfield/cli/parser.hpp"
#include "ratfield/oms/generator_set.hpp"

namespace ratfield::testing {

inline std::string fixture_path(const std::string& name) { return std::string(RATFIELD_FIXTURE_DIR) + "/" + name; }

inline ProblemFile load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

inline FpGenerators images(const QRing& ring, const std::vector<RationalFunction>& gens, std::uint64_t prime) {
  auto g = GeneratorSet(ring, gens).modulo(prime);
  if (!g) throw std::runtime_error("bad prime for fixture");
  return *g;
}

inline FpGenerators images(const ProblemFile& pf, std::uint64_t prime) { return images(pf.ring, pf.gens, prime); }

// expressions over an existing ring, reduced mod p
inline FpGenerators images(const QRing& ring, const std::vector<std::string>& exprs, std::uint64_t prime) {
  std::vector<RationalFunction> gens;
  for (const auto& e : exprs) gens.push_back(parse_expression(e, ring));
  FpRing r = make_ring(PrimeField(prime), ring->vars(), ring->order());
  FpGenerators out{r, {}};
  for (const auto& g : gens) out.gens.push_back(*reduce_mod(g, r));
  return out;
}

inline QRing qring(std::vector<std::string> vars, MonomialOrder order = {}) {
  return make_ring(RationalField(), std::move(vars), order);
}

}  // namespace ratfield::testing

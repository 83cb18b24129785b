#pragma once

#include <stdexcept>
#include <vector>

#include "ratfield/arith/linalg.hpp"
#include "ratfield/arith/random.hpp"
#include "ratfield/oms/eoms.hpp"

namespace ratfield {

struct UnluckyPoint : std::runtime_error {
  UnluckyPoint() : std::runtime_error("repeated unlucky evaluation points") {}
};

// Whether sampling from F_p \ {0} covers the range 12 d^(n+3) / eps that the
// membership test asks for.
bool sampling_bound_met(std::size_t nvars, std::size_t degree, double eps, std::uint64_t prime);

// Which test decided the last contains() call.
enum class MembershipStage { Trivial, Jacobian, Groebner };

// Randomized membership in the field generated by `gens`, modulo p.
// Built once: a Jacobian point a with its pivot columns, and a Groebner basis of
// eOMS(b) + <y_j - b_j : j not a pivot>. Candidates are then tested against both.
class MembershipContext {
 public:
  MembershipContext(const FpGenerators& gens, Rng& rng, double eps = 0.01);

  bool contains(const FpFrac& candidate);

  MembershipStage last_stage() const { return stage_; }
  std::size_t jacobian_rank() const { return rank_; }
  const std::vector<std::size_t>& free_vars() const { return free_; }
  std::size_t generators() const { return eoms_.gens.size(); }
  double epsilon() const { return eps_; }

 private:
  void draw_jacobian_point();
  void build_basis();
  std::optional<FpVec> gradient(const FpFrac& g, const std::vector<FpPoly>& dn, const std::vector<FpPoly>& dd) const;

  EomsTemplate eoms_;
  Rng rng_;
  double eps_;
  FpVec a_, b_;
  std::vector<std::vector<FpPoly>> dnum_, dden_;
  std::vector<FpVec> jac_;
  std::size_t rank_ = 0;
  MembershipStage stage_ = MembershipStage::Trivial;
  std::vector<std::size_t> free_;
  std::optional<ReducedGB> gb_;
};

// Mutual containment; each of the s + r tests gets eps / (s + r).
bool fields_equal(const FpGenerators& a, const FpGenerators& b, Rng& rng, double eps = 0.01);

// Indices of a subset generating the same field, minimal under inclusion.
// Elements are visited in list order; per-test budget eps / m.
std::vector<std::size_t> minimize(const FpGenerators& gens, Rng& rng, double eps = 0.01);

// Rank of the Jacobian of the generators at a random point.
std::size_t jacobian_rank(const FpGenerators& gens, Rng& rng);

struct PolyGenStats {
  std::vector<std::size_t> dims;  // dim V after each iteration, starting with the full space
};

// Basis of { p in F_p[x] : deg p <= delta } intersected with the field, in reduced
// row echelon form over monomials sorted by decreasing degrevlex order. The
// constant 1 is included when include_constants is set.
std::vector<FpPoly> polynomial_generators(const FpGenerators& gens, unsigned delta, Rng& rng,
                                          bool include_constants = true, PolyGenStats* stats = nullptr);

}  // namespace ratfield

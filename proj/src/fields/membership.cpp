#include "ratfield/fields/membership.hpp"

#include <cmath>
#include <map>

namespace ratfield {

bool sampling_bound_met(std::size_t nvars, std::size_t degree, double eps, std::uint64_t prime) {
  long double need = 12.0L * std::pow(static_cast<long double>(std::max<std::size_t>(degree, 1)),
                                      static_cast<long double>(nvars + 3)) / eps;
  return static_cast<long double>(prime - 1) >= need;
}

namespace {

std::vector<FpPoly> partials(const FpPoly& p) {
  std::vector<FpPoly> out;
  for (std::size_t j = 0; j < p.nvars(); ++j) out.push_back(p.derivative(j));
  return out;
}

// gradient of num/den at a; nullopt at a pole
std::optional<FpVec> gradient_at(const FpFrac& g, const std::vector<FpPoly>& dn, const std::vector<FpPoly>& dd,
                                 const FpVec& a) {
  const PrimeField& f = g.num.field();
  Fp q = g.den.evaluate(a);
  if (q == 0) return std::nullopt;
  Fp p = g.num.evaluate(a);
  Fp inv_q2 = f.inv(f.mul(q, q));
  FpVec row(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    row[j] = f.mul(f.sub(f.mul(dn[j].evaluate(a), q), f.mul(p, dd[j].evaluate(a))), inv_q2);
  }
  return row;
}

std::size_t rank_of(const PrimeField& f, const std::vector<FpVec>& rows, std::size_t cols) {
  ModMatrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m.rank();
}

FpGenerators subset(const FpGenerators& g, const std::vector<std::size_t>& idx) {
  FpGenerators out{g.ring, {}};
  for (auto i : idx) out.gens.push_back(g.gens[i]);
  return out;
}

}  // namespace

MembershipContext::MembershipContext(const FpGenerators& gens, Rng& rng, double eps)
    : eoms_(make_eoms(gens, MonomialOrder{OrderKind::DegRevLex})), rng_(rng.split()), eps_(eps) {
  for (const auto& g : eoms_.gens) {
    dnum_.push_back(partials(g.num));
    dden_.push_back(partials(g.den));
  }
  draw_jacobian_point();
  build_basis();
}

std::optional<FpVec> MembershipContext::gradient(const FpFrac& g, const std::vector<FpPoly>& dn,
                                                 const std::vector<FpPoly>& dd) const {
  return gradient_at(g, dn, dd, a_);
}

void MembershipContext::draw_jacobian_point() {
  const PrimeField& f = eoms_.xring->field();
  const std::size_t n = eoms_.xring->nvars();
  for (int attempt = 0; attempt < 16; ++attempt) {
    a_ = rng_.nonzero_point(f, n);
    jac_.clear();
    bool pole = false;
    for (std::size_t i = 0; i < eoms_.gens.size() && !pole; ++i) {
      auto row = gradient(eoms_.gens[i], dnum_[i], dden_[i]);
      if (!row) {
        pole = true;
      } else {
        jac_.push_back(std::move(*row));
      }
    }
    if (pole) continue;
    ModMatrix m(f, 0, n);
    for (const auto& r : jac_) m.append_row(r);
    auto piv = m.rref();
    rank_ = piv.size();
    free_.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_.push_back(j);
    }
    return;
  }
  throw UnluckyPoint();
}

void MembershipContext::build_basis() {
  const PrimeField& f = eoms_.xring->field();
  const std::size_t n = eoms_.xring->nvars();
  for (int attempt = 0; attempt < 16; ++attempt) {
    FpVec b = rng_.nonzero_point(f, n);
    auto spec = specialize_eoms(eoms_, b);
    if (!spec) continue;
    for (auto j : free_) {
      spec->gens.push_back(FpPoly::variable(eoms_.ring, j + 1) - FpPoly::constant(eoms_.ring, b[j]));
    }
    gb_ = groebner(*spec);
    b_ = std::move(b);
    return;
  }
  throw UnluckyPoint();
}

bool MembershipContext::contains(const FpFrac& c) {
  if (!c.num.ring()->same_as(*eoms_.xring)) throw RingMismatch();
  if (c.den.is_zero()) throw DivisionByZero();
  stage_ = MembershipStage::Trivial;
  if (c.num.is_zero() || (c.num.is_constant() && c.den.is_constant())) return true;
  const PrimeField& f = eoms_.xring->field();
  const std::size_t n = eoms_.xring->nvars();

  // the gradient must lie in the row space of the Jacobian
  if (auto g = gradient(c, partials(c.num), partials(c.den))) {
    auto rows = jac_;
    rows.push_back(*g);
    if (rank_of(f, rows, n) > rank_) {
      stage_ = MembershipStage::Jacobian;
      return false;
    }
  }
  stage_ = MembershipStage::Groebner;

  for (int attempt = 0; attempt < 8; ++attempt) {
    Fp qb = c.den.evaluate(b_);
    if (qb == 0) {
      build_basis();
      continue;
    }
    Fp pb = c.num.evaluate(b_);
    FpPoly probe = embed_y(c.num, eoms_.ring).scale(qb) - embed_y(c.den, eoms_.ring).scale(pb);
    return normal_form(probe, *gb_).is_zero();
  }
  throw UnluckyPoint();
}

bool fields_equal(const FpGenerators& a, const FpGenerators& b, Rng& rng, double eps) {
  const double each = eps / static_cast<double>(std::max<std::size_t>(a.gens.size() + b.gens.size(), 1));
  MembershipContext in_b(b, rng, each);
  for (const auto& g : a.gens) {
    if (!in_b.contains(g)) return false;
  }
  MembershipContext in_a(a, rng, each);
  for (const auto& g : b.gens) {
    if (!in_a.contains(g)) return false;
  }
  return true;
}

std::vector<std::size_t> minimize(const FpGenerators& gens, Rng& rng, double eps) {
  const double each = eps / static_cast<double>(std::max<std::size_t>(gens.gens.size(), 1));
  std::vector<std::size_t> kept(gens.gens.size());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;
  for (std::size_t i = 0; i < gens.gens.size(); ++i) {
    std::vector<std::size_t> rest;
    for (auto k : kept) {
      if (k != i) rest.push_back(k);
    }
    MembershipContext ctx(subset(gens, rest), rng, each);
    if (ctx.contains(gens.gens[i])) kept = std::move(rest);
  }
  return kept;
}

std::size_t jacobian_rank(const FpGenerators& gens, Rng& rng) {
  const PrimeField& f = gens.ring->field();
  const std::size_t n = gens.ring->nvars();
  for (int attempt = 0; attempt < 16; ++attempt) {
    FpVec a = rng.nonzero_point(f, n);
    std::vector<FpVec> rows;
    bool pole = false;
    for (const auto& g : gens.gens) {
      auto r = gradient_at(g, partials(g.num), partials(g.den), a);
      if (!r) {
        pole = true;
        break;
      }
      rows.push_back(std::move(*r));
    }
    if (!pole) return rank_of(f, rows, n);
  }
  throw UnluckyPoint();
}

namespace {

void monomials_up_to(std::size_t n, unsigned delta, std::vector<std::uint32_t>& cur, std::size_t pos,
                     unsigned left, std::vector<Monomial>& out) {
  if (pos == n) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur[pos] = e;
    monomials_up_to(n, delta, cur, pos + 1, left - e, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<FpPoly> polynomial_generators(const FpGenerators& gens, unsigned delta, Rng& rng,
                                          bool include_constants, PolyGenStats* stats) {
  if (delta < 1) throw std::invalid_argument("polynomial_generators: delta must be at least 1");
  const PrimeField& f = gens.ring->field();
  const std::size_t n = gens.ring->nvars();
  const MonomialOrder drl{OrderKind::DegRevLex};
  EomsTemplate e = make_eoms(gens, drl);

  std::vector<Monomial> monos;
  std::vector<std::uint32_t> cur(n, 0);
  monomials_up_to(n, delta, cur, 0, delta, monos);
  std::sort(monos.begin(), monos.end(), [&](const Monomial& x, const Monomial& y) { return drl.less(y, x); });
  const std::size_t N = monos.size();

  // rows of V in monomial coordinates
  std::vector<FpVec> V(N, FpVec(N, 0));
  for (std::size_t i = 0; i < N; ++i) V[i][i] = 1;
  std::size_t s = N;
  if (stats) stats->dims.push_back(s);

  int unlucky = 0;
  while (!V.empty()) {
    FpVec a = rng.nonzero_point(f, n);
    auto spec = specialize_eoms(e, a);
    if (!spec) {
      if (++unlucky > 16) throw UnluckyPoint();
      continue;
    }
    ReducedGB gb = groebner(*spec);

    // NF+ of every monomial, as sparse columns
    std::map<std::vector<std::uint32_t>, std::size_t> col;
    std::vector<std::vector<std::pair<std::size_t, Fp>>> nf(N);
    for (std::size_t k = 0; k < N; ++k) {
      std::vector<std::uint32_t> ex{0};
      ex.insert(ex.end(), monos[k].exponents().begin(), monos[k].exponents().end());
      FpPoly r = nf_plus(FpPoly::term(e.ring, Monomial(std::move(ex)), 1), gb);
      for (const auto& t : r.terms()) {
        auto [it, fresh] = col.emplace(t.mono.exponents(), col.size());
        nf[k].emplace_back(it->second, t.coeff);
      }
    }
    // kernel of the map on span(V): columns of T are the images of V's rows
    ModMatrix T(f, col.size(), V.size());
    for (std::size_t r = 0; r < V.size(); ++r) {
      for (std::size_t k = 0; k < N; ++k) {
        if (V[r][k] == 0) continue;
        for (auto [c, v] : nf[k]) T.at(c, r) = f.add(T.at(c, r), f.mul(V[r][k], v));
      }
    }
    auto ker = T.kernel();
    ModMatrix W(f, 0, N);
    for (const auto& w : ker) {
      FpVec row(N, 0);
      for (std::size_t r = 0; r < V.size(); ++r) {
        if (w[r] == 0) continue;
        for (std::size_t k = 0; k < N; ++k) row[k] = f.add(row[k], f.mul(w[r], V[r][k]));
      }
      W.append_row(row);
    }
    auto piv = W.rref();
    std::vector<FpVec> next;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      FpVec row(N);
      for (std::size_t k = 0; k < N; ++k) row[k] = W.at(r, k);
      next.push_back(std::move(row));
    }
    V = std::move(next);
    if (stats) stats->dims.push_back(V.size());
    if (V.size() == s) break;
    s = V.size();
  }

  std::vector<FpPoly> out;
  for (const auto& row : V) {
    std::vector<FpPoly::Term> ts;
    for (std::size_t k = 0; k < N; ++k) {
      if (row[k] != 0) ts.push_back({monos[k], row[k]});
    }
    FpPoly p = FpPoly::from_terms(gens.ring, std::move(ts));
    if (!include_constants && p.is_constant()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace ratfield

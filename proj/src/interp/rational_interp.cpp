#include "ratfield/interp/rational_interp.hpp"

#include <algorithm>

#include "ratfield/interp/ben_or_tiwari.hpp"
#include "ratfield/interp/cauchy.hpp"

namespace ratfield {

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (static_cast<unsigned __int128>(1) << 62)) return 1ULL << 62;
  }
  return static_cast<std::uint64_t>(r);
}

bool homogeneous_of_degree(const FpPoly& p, unsigned d) {
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != d) return false;
  }
  return true;
}

// counts evaluations and enforces the cap
class Counter {
 public:
  Counter(InterpStats* s, const InterpOptions& o) : stats_(s), cap_(o.eval_cap) {}
  bool spend() {
    ++used_;
    if (stats_) ++stats_->evaluations;
    return used_ <= cap_;
  }
  void failed() {
    if (stats_) ++stats_->failed_points;
  }

 private:
  InterpStats* stats_;
  std::size_t cap_;
  std::size_t used_ = 0;
};

}  // namespace

std::vector<DegreeEstimate> estimate_degrees_batch(const MultiBlackbox& bb, unsigned d, const PrimeField& f,
                                                   Rng& rng, InterpStats* stats, const InterpOptions& opts) {
  const std::size_t n = bb.arity, m = bb.outputs;
  std::vector<DegreeEstimate> out(m);
  Counter counter(stats, opts);
  FpVec sigma = rng.nonzero_point(f, n), gamma = rng.nonzero_point(f, n);
  Fp u0;
  do {
    u0 = rng.nonzero(f);
  } while (u0 <= 2ULL * d + 2);

  auto at = [&](Fp u) -> std::optional<FpVec> {
    FpVec x(n);
    for (std::size_t l = 0; l < n; ++l) x[l] = f.add(f.mul(gamma[l], u), sigma[l]);
    if (!counter.spend()) return std::nullopt;
    auto v = bb.eval(x);
    if (!v) counter.failed();
    return v;
  };

  auto check = at(u0);
  if (!check) return out;  // all FAIL
  std::vector<FpVec> vals;
  FpVec pts;
  std::vector<bool> done(m, false);
  std::size_t remaining = m;
  for (unsigned T = 0; T <= d && remaining > 0; ++T) {
    while (vals.size() < 2 * T + 2) {
      Fp u = f.from_uint(vals.size() + 1);
      auto v = at(u);
      if (!v) {
        for (std::size_t k = 0; k < m; ++k) {
          if (!done[k]) out[k].status = DegreeStatus::Fail;
        }
        return out;
      }
      vals.push_back(std::move(*v));
      pts.push_back(u);
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      FpVec ys(pts.size());
      for (std::size_t j = 0; j < pts.size(); ++j) ys[j] = vals[j][k];
      auto c = cauchy_interpolate(f, pts, ys, T, T);
      if (!c) continue;
      const auto& [a, b] = *c;
      Fp bv = b.evaluate(u0);
      if (bv == 0 || a.evaluate(u0) != f.mul(bv, (*check)[k])) continue;
      DegreePair dp{static_cast<unsigned>(std::max<long>(a.degree(), 0)), static_cast<unsigned>(b.degree())};
      out[k].deg = dp;
      out[k].status = dp.num + dp.den > d ? DegreeStatus::Stopped : DegreeStatus::Ok;
      done[k] = true;
      --remaining;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (!done[k]) out[k].status = DegreeStatus::Stopped;
  }
  return out;
}

DegreeEstimate estimate_degrees(const BlackboxFn& bb, unsigned d, const PrimeField& f, Rng& rng,
                                InterpStats* stats) {
  return estimate_degrees_batch(as_multi(bb), d, f, rng, stats).front();
}

std::vector<RationalInterpResult> interpolate_rational_batch(const MultiBlackbox& bb,
                                                             const std::vector<DegreePair>& degrees,
                                                             const std::vector<bool>& wanted, const FpRing& ring,
                                                             Rng& rng, InterpStats* stats,
                                                             const InterpOptions& opts) {
  const PrimeField& f = ring->field();
  const std::size_t n = bb.arity, m = bb.outputs;
  if (ring->nvars() != n || degrees.size() != m || wanted.size() != m) {
    throw std::invalid_argument("interpolate_rational_batch: inconsistent sizes");
  }
  std::vector<RationalInterpResult> res(m);
  Counter counter(stats, opts);

  std::vector<std::string> hvars{"x0"};
  for (const auto& v : ring->vars()) hvars.push_back(v);
  FpRing hring = make_ring(f, hvars, ring->order());
  const AdmissibleRatio ratio = admissible_ratio(f, n + 1);

  std::vector<std::size_t> active;
  std::size_t dmax = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (!wanted[k]) {
      res[k].reason = "not requested";
      continue;
    }
    const auto& dg = degrees[k];
    if (!exponents_recoverable(f, n + 1, std::max(dg.num, dg.den))) {
      res[k].reason = "prime too small for the degree bound";
      continue;
    }
    active.push_back(k);
    dmax = std::max<std::size_t>(dmax, dg.num + dg.den + 2);
  }
  if (active.empty()) return res;

  FpVec sigma = rng.nonzero_point(f, n + 1), gamma = rng.nonzero_point(f, n + 1);
  FpVec us(dmax);
  for (std::size_t j = 0; j < dmax; ++j) us[j] = f.from_uint(j + 1);

  struct Cell {
    FpVec out;
    Fp z0;
  };
  auto eval_hom = [&](const FpVec& z) -> std::optional<Cell> {
    if (z[0] == 0) return std::nullopt;
    Fp inv0 = f.inv(z[0]);
    FpVec x(n);
    for (std::size_t l = 0; l < n; ++l) x[l] = f.mul(z[l + 1], inv0);
    if (!counter.spend()) return std::nullopt;
    auto v = bb.eval(x);
    if (!v) {
      counter.failed();
      return std::nullopt;
    }
    return Cell{std::move(*v), z[0]};
  };
  auto fhat = [&](const Cell& c, std::size_t k) {
    const auto& dg = degrees[k];
    if (dg.num >= dg.den) return f.mul(c.out[k], f.pow(c.z0, dg.num - dg.den));
    return f.mul(c.out[k], f.pow(f.inv(c.z0), dg.den - dg.num));
  };
  auto fail_active = [&](const std::string& why) {
    for (auto k : active) res[k].reason = why;
    active.clear();
  };

  auto sig_cell = eval_hom(sigma);
  if (!sig_cell) {
    fail_active("blackbox FAIL at the shift point");
    return res;
  }
  std::optional<Cell> tau_cell;
  FpVec tau;
  for (int attempt = 0; attempt < 3 && !tau_cell; ++attempt) {
    tau = rng.nonzero_point(f, n + 1);
    tau_cell = eval_hom(tau);
  }
  if (!tau_cell) {
    fail_active("blackbox FAIL at the check point");
    return res;
  }

  std::vector<std::vector<Cell>> rows;  // rows[i][j] at gamma*omega^i*u_j + sigma
  FpVec wpow(n + 1, 1);                 // omega^i for the next row

  for (std::size_t T = 1; !active.empty(); T *= 2) {
    std::vector<std::size_t> next;
    for (auto k : active) {
      const auto& dg = degrees[k];
      // the previous round already allowed every monomial
      if (T / 2 >= binomial_saturating(n + std::max(dg.num, dg.den), n)) {
        res[k].reason = "term bound exceeded the number of monomials";
      } else {
        next.push_back(k);
      }
    }
    active = std::move(next);
    if (active.empty()) break;

    while (rows.size() < 2 * T) {
      std::vector<Cell> row;
      row.reserve(dmax);
      for (std::size_t j = 0; j < dmax; ++j) {
        FpVec z(n + 1);
        for (std::size_t l = 0; l <= n; ++l) z[l] = f.add(f.mul(f.mul(gamma[l], wpow[l]), us[j]), sigma[l]);
        auto c = eval_hom(z);
        if (!c) {
          fail_active("blackbox FAIL or evaluation cap");
          return res;
        }
        row.push_back(std::move(*c));
      }
      rows.push_back(std::move(row));
      for (std::size_t l = 0; l <= n; ++l) wpow[l] = f.mul(wpow[l], ratio.omega[l]);
    }

    std::vector<std::size_t> still;
    for (auto k : active) {
      const auto& dg = degrees[k];
      const std::size_t D = dg.num + dg.den + 2;
      FpVec pts(us.begin(), us.begin() + static_cast<long>(D));
      FpVec topA(2 * T), topB(2 * T);
      bool univariate_ok = true;
      for (std::size_t i = 0; i < 2 * T && univariate_ok; ++i) {
        FpVec ys(D);
        for (std::size_t j = 0; j < D; ++j) ys[j] = fhat(rows[i][j], k);
        auto c = cauchy_interpolate(f, pts, ys, dg.num, dg.den);
        if (!c || c->second.coeff(0) == 0) {
          univariate_ok = false;
          break;
        }
        Fp b0inv = f.inv(c->second.coeff(0));
        topA[i] = f.mul(c->first.coeff(dg.num), b0inv);
        topB[i] = f.mul(c->second.coeff(dg.den), b0inv);
      }
      if (!univariate_ok) {
        res[k].reason = "univariate stage failed";
        continue;
      }
      auto ra = ben_or_tiwari(hring, topA, ratio, dg.num, rng);
      auto rb = ben_or_tiwari(hring, topB, ratio, dg.den, rng);
      bool accepted = false;
      if (ra.status == BotStatus::Ok && rb.status == BotStatus::Ok && !rb.poly.is_zero()) {
        auto unscale = [&](const FpPoly& p) {
          std::vector<FpPoly::Term> ts;
          for (const auto& t : p.terms()) {
            Fp g = 1;
            for (std::size_t l = 0; l <= n; ++l) g = f.mul(g, f.pow(gamma[l], t.mono[l]));
            ts.push_back({t.mono, f.div(t.coeff, g)});
          }
          return FpPoly::from_terms(hring, std::move(ts));
        };
        FpPoly P = unscale(ra.poly), Q = unscale(rb.poly);
        if (homogeneous_of_degree(P, dg.num) && homogeneous_of_degree(Q, dg.den)) {
          auto passes = [&](const FpVec& z, const Cell& c) {
            return P.evaluate(z) == f.mul(Q.evaluate(z), fhat(c, k));
          };
          if (passes(sigma, *sig_cell) && passes(tau, *tau_cell)) {
            auto dehom = [&](const FpPoly& p) {
              std::vector<FpPoly::Term> ts;
              for (const auto& t : p.terms()) {
                std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
                ts.push_back({Monomial(std::move(e)), t.coeff});
              }
              return FpPoly::from_terms(ring, std::move(ts));
            };
            FpPoly num = dehom(P), den = dehom(Q);
            if (num.is_zero()) den = FpPoly::constant(ring, 1);
            Fp s = f.inv(den.lc());
            res[k].ok = true;
            res[k].value = FpFrac{num.scale(s), den.scale(s)};
            res[k].reason.clear();
            accepted = true;
          }
        }
      }
      if (!accepted) still.push_back(k);
    }
    active = std::move(still);
  }
  return res;
}

RationalInterpResult interpolate_rational(const BlackboxFn& bb, DegreePair degrees, const FpRing& ring, Rng& rng,
                                          InterpStats* stats, const InterpOptions& opts) {
  return interpolate_rational_batch(as_multi(bb), {degrees}, {true}, ring, rng, stats, opts).front();
}

}  // namespace ratfield

#include "ratfield/groebner/groebner.hpp"

#include <algorithm>

namespace ratfield {

namespace {

using Index = std::uint32_t;

struct Pair {
  Index i, j;
  Monomial lcm;
  long sugar;
};

FpPoly reduce_with(FpPoly q, const std::vector<const FpPoly*>& divisors) {
  std::vector<FpPoly::Term> out;
  while (!q.is_zero()) {
    const FpPoly* div = nullptr;
    for (const FpPoly* g : divisors) {
      if (g->lm().divides(q.lm())) {
        div = g;
        break;
      }
    }
    if (div) {
      const PrimeField& f = q.field();
      auto c = f.div(q.lc(), div->lc());
      Monomial m = div->lm().quotient_of(q.lm());
      q = q.sub_mul(c, m, *div);
    } else {
      out.push_back(q.terms().front());
      q = q.tail();
    }
  }
  return FpPoly::from_terms(q.ring(), std::move(out));
}

// Working state shared by learn and apply. Elements keep their index for the
// whole run so that trace steps can refer to them.
class Engine {
 public:
  explicit Engine(FpRing ring) : ring_(std::move(ring)) {}

  std::vector<FpPoly> polys;
  std::vector<long> sugar;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  std::vector<const FpPoly*> active_divisors() const {
    std::vector<const FpPoly*> d;
    for (Index k = 0; k < polys.size(); ++k) {
      if (active[k]) d.push_back(&polys[k]);
    }
    return d;
  }

  FpPoly reduce(FpPoly q) const { return reduce_with(std::move(q), active_divisors()); }

  bool top_reducible(const Monomial& m) const {
    for (Index k = 0; k < polys.size(); ++k) {
      if (active[k] && polys[k].lm().divides(m)) return true;
    }
    return false;
  }

  FpPoly spoly(Index i, Index j) const { return s_polynomial(polys[i], polys[j]); }

  void add(FpPoly h, long s, bool track_pairs) {
    const Index idx = static_cast<Index>(polys.size());
    const Monomial hm = h.lm();
    polys.push_back(std::move(h));
    sugar.push_back(s);
    active.push_back(true);
    if (track_pairs) update_pairs(idx);
    for (Index k = 0; k < idx; ++k) {
      if (active[k] && hm.divides(polys[k].lm())) active[k] = false;
    }
  }

  long pair_sugar(Index i, Index j, const Monomial& l) const {
    long di = sugar[i] + static_cast<long>(l.degree() - polys[i].lm().degree());
    long dj = sugar[j] + static_cast<long>(l.degree() - polys[j].lm().degree());
    return std::max(di, dj);
  }

  // Gebauer-Moeller installation of the pairs created by element h
  void update_pairs(Index h) {
    const Monomial& hm = polys[h].lm();
    std::vector<Pair> c;
    for (Index g = 0; g < h; ++g) {
      if (!active[g]) continue;
      Monomial l = Monomial::lcm(hm, polys[g].lm());
      c.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = hm.coprime(polys[p.i].lm());
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = hm.divides(p.lcm) && Monomial::lcm(polys[p.i].lm(), hm) != p.lcm &&
                  Monomial::lcm(polys[p.j].lm(), hm) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : d) {
      if (!hm.coprime(polys[p.i].lm())) next.push_back(std::move(p));
    }
    pairs = std::move(next);
  }

  Pair pop_pair() {
    const auto& ord = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j))) best = k;
    }
    Pair p = pairs[best];
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    return p;
  }

  std::vector<Index> minimal() const {
    std::vector<Index> out;
    for (Index k = 0; k < polys.size(); ++k) {
      if (!active[k]) continue;
      bool redundant = false;
      for (Index o = 0; o < polys.size() && !redundant; ++o) {
        if (o == k || !active[o]) continue;
        if (polys[o].lm().divides(polys[k].lm())) {
          // equal leading monomials cannot both be active, so this is strict
          redundant = true;
        }
      }
      if (!redundant) out.push_back(k);
    }
    return out;
  }

  ReducedGB finish(const std::vector<Index>& surv) const {
    ReducedGB gb{ring_, {}};
    for (Index s : surv) {
      std::vector<const FpPoly*> others;
      for (Index o : surv) {
        if (o != s) others.push_back(&polys[o]);
      }
      FpPoly r = reduce_with(polys[s].tail(), others);
      gb.basis.push_back(polys[s].leading_term() + r);
    }
    const auto& ord = ring_->order();
    std::sort(gb.basis.begin(), gb.basis.end(),
              [&](const FpPoly& a, const FpPoly& b) { return ord.less(a.lm(), b.lm()); });
    return gb;
  }

  ReducedGB unit() const { return ReducedGB{ring_, {FpPoly::constant(ring_, 1)}}; }

 private:
  FpRing ring_;
};

// zero removal, monic scaling, dedup; returns kept positions
std::vector<std::size_t> prepare(const IdealSpec& spec, std::vector<FpPoly>& out) {
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < spec.gens.size(); ++k) {
    const FpPoly& g = spec.gens[k];
    if (!g.ring()->same_as(*spec.ring)) throw RingMismatch();
    if (g.is_zero()) continue;
    FpPoly m = g.monic();
    if (std::find(out.begin(), out.end(), m) != out.end()) continue;
    out.push_back(std::move(m));
    kept.push_back(k);
  }
  return kept;
}

}  // namespace

std::size_t GroebnerTrace::zero_reductions() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const Step& s) { return s.zero; }));
}

FpPoly s_polynomial(const FpPoly& f, const FpPoly& g) {
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  const PrimeField& fld = f.field();
  FpPoly a = f.mul_term(f.lm().quotient_of(l), fld.inv(f.lc()));
  return a.sub_mul(fld.inv(g.lc()), g.lm().quotient_of(l), g);
}

std::pair<ReducedGB, GroebnerTrace> gb_learn(const IdealSpec& spec) {
  GroebnerTrace trace;
  std::vector<FpPoly> inputs;
  trace.kept_inputs = prepare(spec, inputs);
  Engine e(spec.ring);
  for (const auto& g : inputs) trace.input_lms.push_back(g.lm());
  for (auto& g : inputs) {
    if (g.is_constant()) return {e.unit(), trace};
    long s = g.degree();
    e.add(std::move(g), s, true);
  }
  while (!e.pairs.empty()) {
    Pair p = e.pop_pair();
    FpPoly h = e.reduce(e.spoly(p.i, p.j));
    if (h.is_zero()) {
      trace.steps.push_back({p.i, p.j, true, Monomial()});
      continue;
    }
    h = h.monic();
    trace.steps.push_back({p.i, p.j, false, h.lm()});
    if (h.is_constant()) return {e.unit(), trace};
    e.add(std::move(h), p.sugar, true);
  }
  auto surv = e.minimal();
  trace.survivors = surv;
  ReducedGB gb = e.finish(surv);
  for (const auto& b : gb.basis) {
    std::vector<Monomial> sup;
    for (const auto& t : b.terms()) sup.push_back(t.mono);
    trace.shape.push_back(std::move(sup));
  }
  return {gb, trace};
}

ReducedGB groebner(const IdealSpec& spec) { return gb_learn(spec).first; }

std::optional<ReducedGB> gb_apply(const IdealSpec& spec, const GroebnerTrace& trace) {
  std::vector<FpPoly> inputs;
  auto kept = prepare(spec, inputs);
  if (kept != trace.kept_inputs) return std::nullopt;
  Engine e(spec.ring);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k].lm() != trace.input_lms[k]) return std::nullopt;
  }
  for (auto& g : inputs) {
    if (g.is_constant()) return e.unit();
    long s = g.degree();
    e.add(std::move(g), s, false);
  }
  for (const auto& st : trace.steps) {
    if (st.i >= e.polys.size() || st.j >= e.polys.size()) return std::nullopt;
    FpPoly s = e.spoly(st.i, st.j);
    if (st.zero) {
      if (!s.is_zero() && !e.top_reducible(s.lm())) return std::nullopt;
      continue;
    }
    FpPoly h = e.reduce(std::move(s));
    if (h.is_zero() || h.lm() != st.lm) return std::nullopt;
    h = h.monic();
    if (h.is_constant()) return e.unit();
    e.add(std::move(h), 0, false);
  }
  auto surv = e.minimal();
  if (surv != trace.survivors) return std::nullopt;
  ReducedGB gb = e.finish(surv);
  if (gb.basis.size() != trace.shape.size()) return std::nullopt;
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    if (gb.basis[k].lm() != trace.shape[k].front()) return std::nullopt;
  }
  return gb;
}

FpPoly normal_form(const FpPoly& p, const ReducedGB& gb) {
  std::vector<const FpPoly*> d;
  for (const auto& g : gb.basis) d.push_back(&g);
  return reduce_with(p, d);
}

FpPoly nf_plus(const FpPoly& p, const ReducedGB& gb) {
  FpPoly r = normal_form(p, gb);
  if (!r.is_zero() && r.terms().back().mono.is_one()) {
    return r - FpPoly::constant(r.ring(), r.terms().back().coeff);
  }
  return r;
}

}  // namespace ratfield

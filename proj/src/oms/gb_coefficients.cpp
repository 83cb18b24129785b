#include "ratfield/oms/gb_coefficients.hpp"

#include <algorithm>

namespace ratfield {

std::vector<FpFrac> CoefficientReport::nonconstant_values() const {
  std::vector<FpFrac> out;
  for (const auto& e : entries) {
    if (e.value && !(e.value->num.is_constant() && e.value->den.is_constant())) out.push_back(*e.value);
  }
  return out;
}

bool CoefficientReport::complete() const {
  return std::none_of(entries.begin(), entries.end(), [](const CoefficientEntry& e) { return e.high_degree; });
}

namespace {

bool same_shape(const ReducedGB& g, const ReducedGB& ref) {
  if (g.basis.size() != ref.basis.size()) return false;
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    const auto& a = g.basis[i].terms();
    const auto& b = ref.basis[i].terms();
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].mono != b[j].mono) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<CoefficientReport> gb_coefficients(const EomsTemplate& e, unsigned d, Rng& rng,
                                                 const GbCoefficientOptions& opts) {
  const PrimeField& f = e.ring->field();
  const std::size_t n = e.xring->nvars();
  CoefficientReport rep;

  for (std::size_t attempt = 0; attempt < opts.attempts; ++attempt) {
    rep.attempts = attempt + 1;
    std::optional<IdealSpec> spec;
    for (int k = 0; k < 8 && !spec; ++k) spec = specialize_eoms(e, rng.nonzero_point(f, n));
    if (!spec) continue;

    // support discovery at a single random point
    auto [ref, trace] = gb_learn(*spec);
    ++rep.gb_evaluations;
    rep.basis_size = ref.basis.size();
    std::vector<CoefficientEntry> entries;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < ref.basis.size(); ++i) {
      const auto& b = ref.basis[i];
      for (std::size_t j = 0; j < b.terms().size(); ++j) {
        if (b.terms()[j].mono == b.lm()) continue;
        entries.push_back({b.lm(), b.terms()[j].mono, std::nullopt, false, std::nullopt});
        where.emplace_back(i, j);
      }
    }
    if (entries.empty()) {
      rep.entries.clear();
      return rep;
    }

    std::size_t consecutive = 0;
    MultiBlackbox bb{n, entries.size(), [&](const FpVec& a) -> std::optional<FpVec> {
                       if (rep.gb_evaluations >= opts.interp.eval_cap) throw EvaluationBudgetExceeded();
                       ++rep.gb_evaluations;
                       auto s = specialize_eoms(e, a);
                       if (!s) {
                         ++rep.failed_points;
                         return std::nullopt;
                       }
                       auto g = gb_apply(*s, trace);
                       if (!g) {
                         ++rep.divergences;
                         if (++consecutive < opts.relearn_after) {
                           ++rep.failed_points;
                           return std::nullopt;
                         }
                         auto learned = gb_learn(*s);
                         g = std::move(learned.first);
                         trace = std::move(learned.second);
                       }
                       consecutive = 0;
                       if (!same_shape(*g, ref)) {
                         ++rep.failed_points;
                         return std::nullopt;
                       }
                       FpVec out;
                       out.reserve(where.size());
                       for (auto [i, j] : where) out.push_back(g->basis[i].terms()[j].coeff);
                       return out;
                     }};

    auto degs = estimate_degrees_batch(bb, d, f, rng, nullptr, opts.interp);
    if (std::any_of(degs.begin(), degs.end(), [](const DegreeEstimate& x) { return x.status == DegreeStatus::Fail; }))
      continue;
    std::vector<DegreePair> dp(entries.size());
    std::vector<bool> wanted(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (degs[k].status == DegreeStatus::Ok || degs[k].deg.num + degs[k].deg.den > 0) entries[k].degrees = degs[k].deg;
      wanted[k] = degs[k].status == DegreeStatus::Ok;
      entries[k].high_degree = !wanted[k];
      dp[k] = degs[k].deg;
    }
    auto res = interpolate_rational_batch(bb, dp, wanted, e.xring, rng, nullptr, opts.interp);
    bool ok = true;
    for (std::size_t k = 0; k < entries.size() && ok; ++k) {
      if (!wanted[k]) continue;
      if (!res[k].ok) {
        ok = false;
      } else {
        entries[k].value = std::move(res[k].value);
      }
    }
    if (!ok) continue;
    rep.entries = std::move(entries);
    return rep;
  }
  return std::nullopt;
}

}  // namespace ratfield

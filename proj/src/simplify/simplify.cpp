#include "ratfield/simplify/simplify.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "ratfield/fields/membership.hpp"
#include "ratfield/oms/gb_coefficients.hpp"
#include "ratfield/poly/render.hpp"
#include "ratfield/simplify/reconstruct_pool.hpp"
#include "ratfield/simplify/simplicity.hpp"

namespace ratfield {

void SimplifyConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie strictly between 0 and 1");
  if (delta < 1) throw ConfigError("delta must be at least 1");
  if (orders.empty()) throw ConfigError("at least one monomial order is required");
  if (max_degree < 1) throw ConfigError("the degree cap must be at least 1");
  if (final_check && check_primes < 1) throw ConfigError("the final check needs at least one prime");
}

namespace {

// primes below 2^62 in decreasing order
class PrimeCursor {
 public:
  std::uint64_t next() {
    next_ = next_ == 0 ? production_prime() : prev_prime(next_);
    return next_;
  }

 private:
  std::uint64_t next_ = 0;
};

std::string key_of(const Monomial& m) {
  std::string s;
  for (auto e : m.exponents()) s += std::to_string(e) + ",";
  return s;
}

struct ModCandidate {
  std::string key;
  std::string provenance;
  FpFrac value;
};

struct Harvester {
  const GeneratorSet& input;
  const SimplifyConfig& cfg;
  GbCoefficientOptions opts;

  // nonconstant coefficients of every order at cutoff d
  std::vector<ModCandidate> coefficients(const std::vector<EomsTemplate>& es, unsigned d, Rng& rng,
                                         std::size_t& evals, bool& complete, bool& failed) const {
    std::vector<ModCandidate> out;
    complete = true;
    failed = false;
    for (std::size_t oi = 0; oi < es.size(); ++oi) {
      auto rep = gb_coefficients(es[oi], d, rng, opts);
      if (!rep) {
        failed = true;
        complete = false;
        continue;
      }
      evals += rep->gb_evaluations;
      complete = complete && rep->complete();
      for (const auto& e : rep->entries) {
        if (!e.value || (e.value->num.is_constant() && e.value->den.is_constant())) continue;
        out.push_back({"g" + std::to_string(oi) + ":" + key_of(e.lead) + ":" + key_of(e.mono), "gb-coefficient",
                       *e.value});
      }
    }
    return out;
  }

  std::vector<ModCandidate> polynomials(const FpGenerators& base, Rng& rng) const {
    std::vector<ModCandidate> out;
    for (auto& p : polynomial_generators(base, cfg.delta, rng, false)) {
      std::string key = "p:" + key_of(p.lm());
      FpPoly one = FpPoly::from_int(p.ring(), 1);
      out.push_back({std::move(key), "polynomial", FpFrac{std::move(p), std::move(one)}});
    }
    return out;
  }

  std::vector<EomsTemplate> templates(const FpGenerators& g) const {
    std::vector<EomsTemplate> es;
    for (const auto& o : cfg.orders) es.push_back(make_eoms(g, o));
    return es;
  }

  static FpGenerators values_of(const FpRing& ring, const std::vector<ModCandidate>& cs) {
    FpGenerators g{ring, {}};
    for (const auto& c : cs) g.gens.push_back(c.value);
    return g;
  }
};

struct QCandidate {
  RationalFunction f;
  std::string provenance;
};

std::vector<std::string> render_all(const std::vector<RationalFunction>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

std::optional<FpGenerators> images_of(const std::vector<RationalFunction>& fs, const FpRing& ring) {
  FpGenerators g{ring, {}};
  for (const auto& f : fs) {
    auto img = reduce_mod(f, ring);
    if (!img) return std::nullopt;
    g.gens.push_back(std::move(*img));
  }
  return g;
}

struct Attempt {
  std::vector<RationalFunction> output;
};

Attempt run_at_prime(const GeneratorSet& input, const SimplifyConfig& cfg, std::uint64_t p, PrimeCursor& cursor,
                     Rng& rng, SimplificationReport& rep) {
  Harvester hv{input, cfg, {}};
  hv.opts.interp.eval_cap = cfg.eval_cap;
  const FpGenerators g = *input.modulo(p);
  const FpRing& fr = g.ring;
  const auto es = hv.templates(g);

  // degree doubling until the coefficients generate the whole field
  rep.rounds.clear();
  std::vector<ModCandidate> coeffs;
  bool equal = false;
  unsigned final_d = 1;
  for (unsigned d = 1;; d = std::min(2 * d, cfg.max_degree)) {
    final_d = d;
    std::size_t evals = 0;
    bool complete = false, failed = false;
    coeffs = hv.coefficients(es, d, rng, evals, complete, failed);
    if (failed) rep.warnings.push_back("coefficient interpolation failed at d = " + std::to_string(d));
    equal = !coeffs.empty() && fields_equal(g, Harvester::values_of(fr, coeffs), rng, cfg.epsilon / 4);
    rep.rounds.push_back({d, coeffs.size(), evals, equal});
    if (equal || (complete && !failed) || d >= cfg.max_degree) break;
  }
  rep.used_originals_for_polynomials = !equal;
  if (!equal) rep.warnings.push_back("coefficients did not generate the field; polynomial search used the input");
  const FpGenerators base = equal ? Harvester::values_of(fr, coeffs) : g;
  auto polys = hv.polynomials(base, rng);

  std::vector<ModCandidate> modpool = coeffs;
  modpool.insert(modpool.end(), polys.begin(), polys.end());

  // lift to Q, pulling in further primes only for what needs them
  std::vector<std::vector<ModImage>> imgs(modpool.size());
  std::vector<std::optional<RationalFunction>> lifted(modpool.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < modpool.size(); ++i) {
    imgs[i].push_back({p, modpool[i].value});
    auto r = reconstruct_candidate(imgs[i], input.ring());
    if (r.status == ReconstructStatus::Ok) {
      lifted[i] = std::move(r.value);
    } else {
      pending.push_back(i);
    }
  }
  for (unsigned extra = 0; extra < cfg.crt_primes && !pending.empty(); ++extra) {
    std::uint64_t q = cursor.next();
    auto gq = input.modulo(q);
    if (!gq) continue;
    rep.warnings.push_back("reconstruction used the additional prime " + std::to_string(q));
    std::size_t evals = 0;
    bool complete = false, failed = false;
    auto cq = hv.coefficients(hv.templates(*gq), final_d, rng, evals, complete, failed);
    auto pq = hv.polynomials(equal ? Harvester::values_of(gq->ring, cq) : *gq, rng);
    std::map<std::string, FpFrac> by_key;
    for (auto& c : cq) by_key.emplace(c.key, c.value);
    for (auto& c : pq) by_key.emplace(c.key, c.value);
    std::vector<std::size_t> still;
    for (auto i : pending) {
      auto it = by_key.find(modpool[i].key);
      if (it == by_key.end()) {
        still.push_back(i);
        continue;
      }
      imgs[i].push_back({q, it->second});
      auto r = reconstruct_candidate(imgs[i], input.ring());
      if (r.status == ReconstructStatus::Ok) {
        lifted[i] = std::move(r.value);
      } else if (r.status == ReconstructStatus::Inconsistent) {
        imgs[i].pop_back();
        still.push_back(i);
      } else {
        still.push_back(i);
      }
    }
    pending = std::move(still);
  }
  if (!pending.empty()) {
    rep.warnings.push_back(std::to_string(pending.size()) + " candidate(s) dropped: reconstruction needs more primes");
  }

  // pool up to scaling, shifting and inversion
  std::vector<QCandidate> raw;
  if (cfg.retain_originals) {
    for (const auto& f : input.gens()) raw.push_back({f, "original"});
  }
  for (std::size_t i = 0; i < modpool.size(); ++i) {
    if (lifted[i]) raw.push_back({*lifted[i], modpool[i].provenance});
  }
  std::vector<QCandidate> pool;
  for (auto& c : raw) {
    RationalFunction cf = canonical_form(c.f);
    if (cf.is_constant()) continue;
    bool seen = std::any_of(pool.begin(), pool.end(), [&](const QCandidate& x) { return x.f == cf; });
    if (!seen) pool.push_back({std::move(cf), c.provenance});
  }
  rep.pool.clear();
  for (const auto& c : pool) rep.pool.push_back({to_string(c.f), c.provenance});

  std::stable_sort(pool.begin(), pool.end(),
                   [](const QCandidate& a, const QCandidate& b) { return simplicity_compare(a.f, b.f) < 0; });
  rep.sorted.clear();
  for (const auto& c : pool) rep.sorted.push_back(to_string(c.f));

  // greedy filter: keep what the simpler survivors do not already generate
  const double each = cfg.epsilon / 2 / static_cast<double>(std::max<std::size_t>(pool.size(), 1));
  std::vector<RationalFunction> kept;
  FpGenerators kept_img{fr, {}};
  std::optional<MembershipContext> ctx;
  for (const auto& c : pool) {
    auto img = reduce_mod(c.f, fr);
    if (!img) {
      rep.warnings.push_back("skipped " + to_string(c.f) + ": no image modulo the working prime");
      continue;
    }
    if (ctx && ctx->contains(*img)) continue;
    kept.push_back(c.f);
    kept_img.gens.push_back(std::move(*img));
    ctx.emplace(kept_img, rng, each);
  }

  if (cfg.minimize && kept.size() > 1) {
    FpGenerators rev{fr, {kept_img.gens.rbegin(), kept_img.gens.rend()}};
    auto idx = minimize(rev, rng, cfg.epsilon / 4);
    std::vector<bool> keep(kept.size(), false);
    for (auto i : idx) keep[kept.size() - 1 - i] = true;
    std::vector<RationalFunction> m;
    FpGenerators mi{fr, {}};
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (!keep[i]) continue;
      m.push_back(kept[i]);
      mi.gens.push_back(kept_img.gens[i]);
    }
    kept = std::move(m);
    kept_img = std::move(mi);
  }
  rep.minimized = cfg.minimize;
  rep.jacobian_rank = kept.empty() ? 0 : jacobian_rank(kept_img, rng);
  rep.dependent = rep.jacobian_rank < kept.size();
  return {std::move(kept)};
}

}  // namespace

SimplifyResult simplify(const GeneratorSet& gens, const SimplifyConfig& cfg) {
  cfg.validate();
  SimplificationReport rep;
  rep.variables = gens.ring()->vars();
  rep.input = render_all(gens.gens());
  rep.config = cfg;

  std::vector<RationalFunction> nonconstant;
  for (const auto& f : gens.gens()) {
    if (f.is_constant()) {
      rep.warnings.push_back("dropped constant generator " + to_string(f));
    } else {
      nonconstant.push_back(f);
    }
  }
  if (nonconstant.empty()) {
    rep.verified = true;
    return {{}, std::move(rep)};
  }
  GeneratorSet input(gens.ring(), nonconstant);

  std::size_t maxdeg = 0;
  for (const auto& f : input.gens()) {
    maxdeg = std::max<std::size_t>({maxdeg, static_cast<std::size_t>(f.num().degree()),
                                    static_cast<std::size_t>(f.den().degree())});
  }
  rep.sampling_bound_met = sampling_bound_met(input.ring()->nvars(), maxdeg, cfg.epsilon, production_prime());

  Rng master(cfg.seed);
  PrimeCursor cursor;
  for (unsigned attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
    rep.restarts = attempt;
    std::uint64_t p = cursor.next();
    while (!input.modulo(p)) p = cursor.next();
    rep.working_prime = p;
    Rng rng = master.split();
    auto out = run_at_prime(input, cfg, p, cursor, rng, rep);
    rep.output = render_all(out.output);

    if (!cfg.final_check) {
      rep.verified = false;
      rep.warnings.push_back("final check disabled");
      return {std::move(out.output), std::move(rep)};
    }
    // input and output must generate the same field at fresh primes
    rep.check_primes.clear();
    bool ok = true;
    while (rep.check_primes.size() < cfg.check_primes && ok) {
      std::uint64_t q = cursor.next();
      auto a = input.modulo(q);
      if (!a) continue;
      auto b = images_of(out.output, a->ring);
      if (!b) continue;
      rep.check_primes.push_back(q);
      ok = fields_equal(*a, *b, rng, cfg.epsilon / 2 / cfg.check_primes);
    }
    if (ok) {
      rep.verified = true;
      return {std::move(out.output), std::move(rep)};
    }
    rep.warnings.push_back("final check failed at prime " + std::to_string(rep.check_primes.back()));
  }
  rep.verified = false;
  throw VerificationFailed(std::move(rep));
}

std::string SimplificationReport::to_json() const {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = 1;
  j["variables"] = variables;
  j["input"] = input;
  json orders = json::array();
  for (const auto& o : config.orders) orders.push_back(o.name());
  j["config"] = {{"orders", orders},
                 {"delta", config.delta},
                 {"epsilon", config.epsilon},
                 {"minimize", config.minimize},
                 {"retain_originals", config.retain_originals},
                 {"final_check", config.final_check},
                 {"eval_cap", config.eval_cap},
                 {"max_degree", config.max_degree},
                 {"check_primes", config.check_primes}};
  j["sampling"] = {{"range", "nonzero residues mod p"}, {"bound_met", sampling_bound_met}};
  json rs = json::array();
  for (const auto& r : rounds) rs.push_back({{"d", r.d}, {"n_coeffs", r.n_coeffs}, {"n_evals", r.n_evals}, {"equal", r.equal}});
  j["rounds"] = rs;
  j["polynomial_search_on_input"] = used_originals_for_polynomials;
  json ps = json::array();
  for (const auto& e : pool) ps.push_back({{"expr", e.expr}, {"provenance", e.provenance}});
  j["pool"] = ps;
  j["sorted"] = sorted;
  j["output"] = output;
  j["minimized"] = minimized;
  j["jacobian_rank"] = jacobian_rank;
  j["dependent"] = dependent;
  j["verified"] = verified;
  j["working_prime"] = working_prime;
  json primes = json::array({working_prime});
  for (auto q : check_primes) primes.push_back(q);
  j["primes"] = primes;
  j["restarts"] = restarts;
  j["seed"] = config.seed;
  j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

}  // namespace ratfield

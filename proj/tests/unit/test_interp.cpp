#include <doctest.h>

#include "ratfield/interp/ben_or_tiwari.hpp"
#include "ratfield/interp/cauchy.hpp"
#include "ratfield/interp/rational_interp.hpp"

using namespace ratfield;

namespace {

const PrimeField& big() {
  static const PrimeField f(production_prime());
  return f;
}

FpRing ring_of(std::vector<std::string> vars) { return make_ring(big(), std::move(vars)); }

BlackboxFn from_pair(const FpPoly& num, const FpPoly& den) {
  return {num.nvars(), [num, den](const FpVec& x) -> std::optional<Fp> {
            const auto& f = num.field();
            Fp d = den.evaluate(x);
            if (d == 0) return std::nullopt;
            return f.div(num.evaluate(x), d);
          }};
}

FpPoly random_sparse(const FpRing& r, Rng& rng, int terms, int maxdeg) {
  std::vector<FpPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    int budget = static_cast<int>(rng.below(maxdeg + 1));
    for (int k = 0; k < budget; ++k) {
      std::size_t v = rng.below(r->nvars());
      m.set(v, m[v] + 1);
    }
    ts.push_back({m, rng.nonzero(r->field())});
  }
  return FpPoly::from_terms(r, ts);
}

// num/den equals the reference pair as a function, checked by cross multiplication
bool same_fraction(const FpFrac& got, const FpPoly& n, const FpPoly& d) {
  return (got.num * d - n * got.den).is_zero();
}

}  // namespace

TEST_CASE("cauchy interpolation examples") {
  PrimeField f(1000003);
  SUBCASE("constant") {
    auto c = cauchy_interpolate(f, {1, 2, 3}, {7, 7, 7}, 1, 1);
    REQUIRE(c);
    CHECK(c->first == UPoly::constant(f, 7));
    CHECK(c->second == UPoly::constant(f, 1));
  }
  SUBCASE("1/(u+1)") {
    FpVec xs{0, 1, 2, 3}, ys;
    for (auto u : xs) ys.push_back(f.inv(u + 1));
    auto c = cauchy_interpolate(f, xs, ys, 0, 1);
    REQUIRE(c);
    CHECK(c->first == UPoly::constant(f, 1));
    CHECK(c->second == UPoly(f, {1, 1}));
  }
  SUBCASE("u^2 does not fit (1, 0)") {
    FpVec xs{1, 2, 3, 4}, ys{1, 4, 9, 16};
    CHECK_FALSE(cauchy_interpolate(f, xs, ys, 1, 0));
  }
  SUBCASE("degree-free variant") {
    FpVec xs, ys;
    for (Fp u = 1; u <= 8; ++u) {
      xs.push_back(u);
      ys.push_back(f.div(f.add(f.mul(u, u), 3), f.add(u, 5)));
    }
    auto c = mqrfr_interpolate(f, xs, ys);
    REQUIRE(c);
    CHECK(c->first == UPoly(f, {3, 0, 1}));
    CHECK(c->second == UPoly(f, {5, 1}));
  }
}

TEST_CASE("interpolate_poly and split_roots") {
  PrimeField f(1000003);
  UPoly p(f, {5, 0, 3, 1});
  FpVec xs{2, 9, 11, 40}, ys;
  for (auto x : xs) ys.push_back(p.evaluate(x));
  CHECK(interpolate_poly(f, xs, ys) == p);

  Rng rng(3);
  UPoly q = UPoly(f, {f.neg(4), 1}) * UPoly(f, {f.neg(17), 1}) * UPoly(f, {f.neg(900), 1});
  auto roots = split_roots(q, rng);
  REQUIRE(roots);
  CHECK(*roots == FpVec{4, 17, 900});
  // x^2 + 1 has no roots mod 1000003 (which is 3 mod 4)
  CHECK_FALSE(split_roots(UPoly(f, {1, 0, 1}), rng));
  // repeated root
  CHECK_FALSE(split_roots(UPoly(f, {f.neg(4), 1}) * UPoly(f, {f.neg(4), 1}), rng));
}

TEST_CASE("sparse polynomial recovery examples") {
  auto r = ring_of({"x", "y"});
  const auto& f = big();
  auto ratio = admissible_ratio(f, 2);
  CHECK(ratio.primes == std::vector<std::uint64_t>{2, 3});
  Rng rng(11);
  auto x = FpPoly::variable(r, 0), y = FpPoly::variable(r, 1);

  auto c = ben_or_tiwari(r, {7, 7}, ratio, 4, rng);
  REQUIRE(c.status == BotStatus::Ok);
  CHECK(c.poly == FpPoly::from_int(r, 7));

  auto m = ben_or_tiwari(r, {3, 36}, ratio, 4, rng);
  REQUIRE(m.status == BotStatus::Ok);
  CHECK(m.poly == FpPoly::from_int(r, 3) * x * x * y);

  auto s = ben_or_tiwari(r, {2, 5, 13, 35}, ratio, 4, rng);
  REQUIRE(s.status == BotStatus::Ok);
  CHECK(s.poly == x + y);

  // x + y with a single term allowed cannot be recovered
  CHECK(ben_or_tiwari(r, {2, 5}, ratio, 4, rng).status != BotStatus::Ok);
  // degree bound excludes x^2 y
  CHECK(ben_or_tiwari(r, {3, 36}, ratio, 2, rng).status == BotStatus::RootNotSmooth);
}

TEST_CASE("degree estimation examples") {
  auto r = ring_of({"x1", "x2"});
  auto x1 = FpPoly::variable(r, 0), x2 = FpPoly::variable(r, 1);
  auto one = FpPoly::from_int(r, 1);
  Rng rng(5);
  const auto& f = big();

  auto c = estimate_degrees(from_pair(FpPoly::from_int(r, 9), one), 4, f, rng);
  CHECK(c.status == DegreeStatus::Ok);
  CHECK(c.deg == DegreePair{0, 0});

  auto e = estimate_degrees(from_pair(x1 * x1 + one, x2), 10, f, rng);
  CHECK(e.status == DegreeStatus::Ok);
  CHECK(e.deg == DegreePair{2, 1});

  auto big_num = (x1 + x2 + one).pow(6), big_den = (x1 - x2 * x2 * x2 + one).pow(2);
  auto s = estimate_degrees(from_pair(big_num, big_den), 4, f, rng);
  CHECK(s.status == DegreeStatus::Stopped);

  BlackboxFn failing{2, [](const FpVec&) -> std::optional<Fp> { return std::nullopt; }};
  CHECK(estimate_degrees(failing, 4, f, rng).status == DegreeStatus::Fail);
}

TEST_CASE("rational interpolation examples") {
  auto r = ring_of({"x1", "x2"});
  auto x1 = FpPoly::variable(r, 0), x2 = FpPoly::variable(r, 1);
  auto one = FpPoly::from_int(r, 1);
  const auto& f = big();
  Rng rng(8);

  auto c = interpolate_rational(from_pair(FpPoly::from_int(r, 5), one), {0, 0}, r, rng);
  REQUIRE(c.ok);
  CHECK(c.value->num == FpPoly::from_int(r, 5));
  CHECK(c.value->den == one);

  auto num = x1 + x2, den = x1 * x2;
  auto q = interpolate_rational(from_pair(num, den), {1, 2}, r, rng);
  REQUIRE(q.ok);
  CHECK(q.value->num == num);
  CHECK(q.value->den == den);
  for (int i = 0; i < 20; ++i) {
    auto pt = rng.nonzero_point(f, 2);
    CHECK(q.value->evaluate(pt) == f.div(num.evaluate(pt), den.evaluate(pt)));
  }

  auto bad = interpolate_rational(from_pair(x1 * x1, one), {1, 0}, r, rng);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.reason.empty());

  auto zero = interpolate_rational(from_pair(FpPoly(r), one), {0, 0}, r, rng);
  REQUIRE(zero.ok);
  CHECK(zero.value->num.is_zero());
}

TEST_CASE("interpolation does not depend on the random stream") {
  auto r = ring_of({"a", "b", "c"});
  Rng gen(21);
  auto num = random_sparse(r, gen, 4, 3), den = random_sparse(r, gen, 3, 2) + FpPoly::from_int(r, 1);
  std::optional<FpFrac> first;
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    Rng rng(seed);
    auto d = estimate_degrees(from_pair(num, den), 12, big(), rng);
    REQUIRE(d.status == DegreeStatus::Ok);
    auto res = interpolate_rational(from_pair(num, den), d.deg, r, rng);
    REQUIRE(res.ok);
    if (!first) {
      first = res.value;
    } else {
      CHECK(res.value->num == first->num);
      CHECK(res.value->den == first->den);
    }
  }
}

TEST_CASE("evaluation count stays within the doubling bound") {
  auto r = ring_of({"a", "b", "c", "d"});
  Rng gen(33);
  for (int round = 0; round < 5; ++round) {
    auto num = random_sparse(r, gen, 5, 4), den = random_sparse(r, gen, 4, 3) + FpPoly::from_int(r, 1);
    Rng rng(100 + round);
    auto d = estimate_degrees(from_pair(num, den), 20, big(), rng);
    REQUIRE(d.status == DegreeStatus::Ok);
    InterpStats st;
    auto res = interpolate_rational(from_pair(num, den), d.deg, r, rng, &st);
    REQUIRE(res.ok);
    std::size_t terms = std::max(res.value->num.num_terms(), res.value->den.num_terms());
    std::size_t D = d.deg.num + d.deg.den + 2;
    // rows grow to 2T with T < 2*terms, plus the two check points
    CHECK(st.evaluations <= 4 * terms * D + 4);
  }
}

TEST_CASE("round trip on random sparse functions") {
  auto r = ring_of({"a", "b", "c"});
  Rng gen(77);
  int ok = 0;
  for (int round = 0; round < 15; ++round) {
    auto num = random_sparse(r, gen, 1 + static_cast<int>(gen.below(5)), 4);
    auto den = random_sparse(r, gen, 1 + static_cast<int>(gen.below(4)), 3);
    if (den.is_zero()) continue;
    Rng rng(round);
    auto d = estimate_degrees(from_pair(num, den), 20, big(), rng);
    REQUIRE(d.status == DegreeStatus::Ok);
    auto res = interpolate_rational(from_pair(num, den), d.deg, r, rng);
    REQUIRE(res.ok);
    CHECK(same_fraction(*res.value, num, den));
    CHECK(big().is_one(res.value->den.lc()));
    ++ok;
  }
  CHECK(ok > 10);
}

TEST_CASE("batch interpolation shares one grid") {
  auto r = ring_of({"x", "y"});
  auto x = FpPoly::variable(r, 0), y = FpPoly::variable(r, 1);
  auto one = FpPoly::from_int(r, 1);
  std::vector<std::pair<FpPoly, FpPoly>> fs{{x + y, one}, {x * y, x + one}, {one, y * y + x}};
  MultiBlackbox bb{2, fs.size(), [&](const FpVec& pt) -> std::optional<FpVec> {
                     FpVec out;
                     for (auto& [n, d] : fs) {
                       Fp dv = d.evaluate(pt);
                       if (dv == 0) return std::nullopt;
                       out.push_back(big().div(n.evaluate(pt), dv));
                     }
                     return out;
                   }};
  Rng rng(4);
  auto degs = estimate_degrees_batch(bb, 8, big(), rng);
  REQUIRE(degs.size() == 3);
  CHECK(degs[0].deg == DegreePair{1, 0});
  CHECK(degs[1].deg == DegreePair{2, 1});
  CHECK(degs[2].deg == DegreePair{0, 2});
  std::vector<DegreePair> dp;
  for (auto& e : degs) dp.push_back(e.deg);
  auto res = interpolate_rational_batch(bb, dp, {true, false, true}, r, rng);
  REQUIRE(res[0].ok);
  CHECK_FALSE(res[1].ok);
  REQUIRE(res[2].ok);
  CHECK(same_fraction(*res[0].value, fs[0].first, fs[0].second));
  CHECK(same_fraction(*res[2].value, fs[2].first, fs[2].second));
}

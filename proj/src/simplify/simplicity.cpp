#include "ratfield/simplify/simplicity.hpp"

#include <set>

#include "ratfield/poly/render.hpp"

namespace ratfield {

namespace {

struct Oriented {
  const QPoly& num;
  const QPoly& den;
};

Oriented orient(const RationalFunction& f) {
  if (f.num().degree() < f.den().degree()) return {f.den(), f.num()};
  return {f.num(), f.den()};
}

// >0 when the largest monomial found in only one support belongs to a
int support_tiebreak(const QPoly& a, const QPoly& p) {
  const MonomialOrder& ord = a.ring()->order();
  auto cmp = [&](const Monomial& x, const Monomial& y) { return ord.less(y, x); };
  std::set<Monomial, decltype(cmp)> sa(cmp), sp(cmp);
  for (const auto& t : a.terms()) sa.insert(t.mono);
  for (const auto& t : p.terms()) sp.insert(t.mono);
  auto ia = sa.begin(), ip = sp.begin();
  while (ia != sa.end() || ip != sp.end()) {
    if (ip == sp.end()) return 1;
    if (ia == sa.end()) return -1;
    if (*ia == *ip) {
      ++ia;
      ++ip;
      continue;
    }
    // the larger of the two heads is unmatched
    return cmp(*ia, *ip) ? 1 : -1;
  }
  return 0;
}

}  // namespace

SimplicityKey simplicity_key(const RationalFunction& f) {
  auto o = orient(f);
  auto da = static_cast<unsigned>(std::max<long>(o.num.degree(), 0));
  auto db = static_cast<unsigned>(std::max<long>(o.den.degree(), 0));
  return {da + db, o.num.num_terms() + o.den.num_terms(), db};
}

int simplicity_compare(const RationalFunction& f, const RationalFunction& g) {
  auto kf = simplicity_key(f), kg = simplicity_key(g);
  if (kf < kg) return -1;
  if (kg < kf) return 1;
  auto of = orient(f), og = orient(g);
  if (int c = support_tiebreak(of.num, og.num)) return c;
  if (int c = support_tiebreak(of.den, og.den)) return c;
  int c = to_string(f).compare(to_string(g));
  return (c > 0) - (c < 0);
}

RationalFunction canonical_form(const RationalFunction& f) {
  const QRing& r = f.ring();
  if (f.is_constant()) return RationalFunction(QPoly::from_int(r, 1));
  QPoly num = f.num(), den = f.den();
  if (den.is_constant()) {
    num = num - QPoly::constant(r, num.constant_coeff());
    den = QPoly::from_int(r, 1);
  }
  if (num.degree() < den.degree()) std::swap(num, den);
  num = primitive_integer_part(num);
  den = primitive_integer_part(den);
  if (num.lc() < 0) num = -num;
  if (den.lc() < 0) den = -den;
  return RationalFunction(num, den);
}

}  // namespace ratfield

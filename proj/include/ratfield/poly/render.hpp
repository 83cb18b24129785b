#pragma once

#include <string>
#include <vector>

#include "ratfield/poly/multipoly.hpp"
#include "ratfield/poly/rational_function.hpp"

namespace ratfield {

std::string render_monomial(const Monomial& m, const std::vector<std::string>& vars);

// Canonical text: descending terms, explicit '*', '^' for powers, e.g. 3*x1^2*x2 - 1/2*x3
template <class F>
std::string to_string(const MultiPoly<F>& p) {
  if (p.is_zero()) return "0";
  const F& f = p.field();
  const auto& vars = p.ring()->vars();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = f.is_negative(t.coeff);
    auto c = neg ? f.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += f.to_string(c);
    } else if (f.is_one(c)) {
      out += render_monomial(t.mono, vars);
    } else {
      out += f.to_string(c) + "*" + render_monomial(t.mono, vars);
    }
  }
  return out;
}

template <class F>
std::string render_fraction(const MultiPoly<F>& num, const MultiPoly<F>& den) {
  if (den.is_one()) return to_string(num);
  std::string n = to_string(num);
  if (num.num_terms() > 1) n = "(" + n + ")";
  std::string d = to_string(den);
  const auto& dt = den.terms();
  bool bare = dt.size() == 1 && den.field().is_one(dt[0].coeff);
  if (bare) {
    std::size_t nz = 0;
    for (auto e : dt[0].mono.exponents()) nz += e != 0;
    bare = nz == 1;
  }
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

template <class F>
std::string to_string(const RatFun<F>& r) {
  return render_fraction(r.num(), r.den());
}

// Over Q the denominator is printed with coprime integer coefficients, the
// scale moving into the numerator: 1/(2*x + 1) rather than 1/2/(x + 1/2).
std::string to_string(const RationalFunction& r);

template <class F>
std::string to_string(const FracPair<F>& r) {
  if (r.den.is_one()) return to_string(r.num);
  return "(" + to_string(r.num) + ")/(" + to_string(r.den) + ")";
}

}  // namespace ratfield

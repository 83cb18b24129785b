#include "ratfield/poly/univariate.hpp"

#include <stdexcept>

namespace ratfield {

UPoly UPoly::monomial(const PrimeField& f, std::size_t k, Element c) {
  std::vector<Element> v(k + 1, 0);
  v[k] = c;
  return UPoly(f, std::move(v));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Element> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
  return UPoly(f_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Element> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
  return UPoly(f_, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly(f_);
  std::vector<Element> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
  }
  return UPoly(f_, std::move(r));
}

UPoly UPoly::scale(Element s) const {
  std::vector<Element> r = c_;
  for (auto& v : r) v = f_.mul(v, s);
  return UPoly(f_, std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scale(f_.inv(lc()));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < d.degree()) return {UPoly(f_), *this};
  std::vector<Element> r = c_;
  std::vector<Element> q(c_.size() - d.c_.size() + 1, 0);
  const Element li = f_.inv(d.lc());
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Element c = f_.mul(r[k + dd], li);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] = f_.sub(r[k + j], f_.mul(c, d.c_[j]));
  }
  r.resize(dd);
  return {UPoly(f_, std::move(q)), UPoly(f_, std::move(r))};
}

UPoly::Element UPoly::evaluate(Element x) const {
  Element acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
  return acc;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m) {
  const PrimeField& f = base.field();
  UPoly r = UPoly::constant(f, 1) % m;
  UPoly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

}  // namespace ratfield

#include "ratfield/poly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratfield {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
  for (auto v : e_) deg_ += v;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t power) {
  Monomial m(nvars);
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t v) {
  deg_ = deg_ - e_[i] + v;
  e_[i] = v;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.e_.size() != e_.size()) throw std::invalid_argument("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.deg_ += o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r = o;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
  r.deg_ -= deg_;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] && o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  for (auto v : r.e_) r.deg_ += v;
  return r;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (kind == OrderKind::Lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  // tie: right-most nonzero entry of a - b positive means a < b
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace ratfield

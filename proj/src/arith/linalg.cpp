#include "ratfield/arith/linalg.hpp"

#include <stdexcept>

namespace ratfield {

void ModMatrix::append_row(const std::vector<Element>& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> ModMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    }
    Element s = f_.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = f_.mul(at(r, j), s);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Element m = at(i, c);
      if (m == 0) continue;
      for (std::size_t j = c; j < cols_; ++j) {
        if (at(r, j) != 0) at(i, j) = f_.sub(at(i, j), f_.mul(m, at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ModMatrix::rank() const {
  ModMatrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<ModMatrix::Element>> ModMatrix::kernel() const {
  ModMatrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f_.neg(m.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ratfield

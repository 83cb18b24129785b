#pragma once

#include <cstddef>
#include <vector>

#include "ratfield/arith/prime_field.hpp"

namespace ratfield {

// Dense row-major matrix over F_p, sized for desk-scale rank and kernel work.
class ModMatrix {
 public:
  using Element = PrimeField::Element;

  ModMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return f_; }

  Element& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Element at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<Element>& row);

  // In-place reduced row echelon form; returns pivot columns (row i has pivot pivots[i]).
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  // Basis of { v : M v = 0 }, one vector per free column, in RREF-canonical form
  // (each basis vector has a 1 at its free column and 0 at the other free columns).
  std::vector<std::vector<Element>> kernel() const;

 private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<Element> a_;
};

}  // namespace ratfield

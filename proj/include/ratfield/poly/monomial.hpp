#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ratfield {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  void set(std::size_t i, std::uint32_t v);

  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // precondition: divides(o); returns o / *this
  Monomial quotient_of(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  std::vector<std::uint32_t> e_;
  std::uint64_t deg_ = 0;
};

enum class OrderKind { DegRevLex, Lex };

// Variables are ranked by their position in the ring: index 0 is the greatest.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;

  // <0, 0, >0 like strcmp
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind; }
  std::string name() const { return kind == OrderKind::Lex ? "lex" : "degrevlex"; }
};

}  // namespace ratfield

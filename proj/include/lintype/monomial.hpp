#pragma once

#include <vector>

#include "lintype/errors.hpp"

namespace lintype {

// Exponent vector of fixed length (= number of ring variables) with the
// total degree cached.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  const std::vector<int>& exponents() const { return e_; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const;  // pre: other | *this
  Monomial with_exponent(std::size_t i, int value) const;

  long weighted_degree(const std::vector<int>& weights) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  bool operator!=(const Monomial& other) const { return e_ != other.e_; }

private:
  std::vector<int> e_;
  int deg_ = 0;
};

// 1 if a > b, -1 if a < b, 0 if equal, in graded reverse lexicographic
// order.  This is also the canonical storage order for polynomial terms.
int degrevlex_compare(const Monomial& a, const Monomial& b);

}  // namespace lintype

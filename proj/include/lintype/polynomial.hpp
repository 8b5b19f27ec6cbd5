#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lintype/monomial.hpp"
#include "lintype/order.hpp"
#include "lintype/point.hpp"
#include "lintype/rational.hpp"
#include "lintype/ring.hpp"

namespace lintype {

// Terms are stored descending in degrevlex, so iteration starts at the
// degrevlex leading term and printing is canonical.
struct StorageTermGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_compare(a, b) > 0;
  }
};

// Sparse multivariate polynomial with exact rational coefficients.  No
// stored coefficient is zero; the zero polynomial has an empty term map and
// two polynomials are equal iff their term maps are identical.  Immutable
// in spirit: all operations return new values.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, StorageTermGreater>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const Ring& ring) { return Polynomial(ring); }
  static Polynomial constant(const Ring& ring, const Rational& value);
  static Polynomial variable(const Ring& ring, std::size_t i);
  static Polynomial term(const Ring& ring, const Monomial& m,
                         const Rational& coeff);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_unit_constant() const;  // nonzero constant

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& coeff);  // builder

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned long e) const;

  // Formal partial derivative; throws PreconditionError if i is out of
  // range.
  Polynomial derivative(std::size_t i) const;

  int total_degree() const;          // -1 for the zero polynomial
  int initial_degree() const;        // min degree over support; throws on 0
  int degree_in(std::size_t i) const;
  bool is_homogeneous() const;

  // Sum of the terms of total degree <= d.
  Polynomial jet(int d) const;

  // (F, d): d = minimal weighted degree over the support, F = sum of terms
  // of weighted degree exactly d.  Weights must be strictly positive.
  std::pair<Polynomial, long> weighted_initial_part(
      const std::vector<int>& weights) const;

  // f with x_i := 1, expressed in the ring without x_i.  Requires f
  // homogeneous.
  Polynomial dehomogenize(std::size_t i) const;

  // g with g(x) = f(x + p); in particular g(0) = f(p).
  Polynomial translate(const Point& p) const;

  Rational evaluate(const Point& p) const;
  Polynomial substitute(std::size_t i, const Rational& value) const;
  // f with x_i := 0 for every masked variable, in the same ring.
  Polynomial zero_out(const std::vector<char>& mask) const;

  // Leading data with respect to an arbitrary order (linear scan).
  const Monomial& lead_monomial(const MonomialOrder& order) const;
  Rational lead_coeff(const MonomialOrder& order) const;

  // Positive gcd of all coefficients (1 for the zero polynomial).
  Rational content() const;
  // *this divided by +-content, sign chosen so the storage-leading
  // coefficient is positive.
  Polynomial primitive() const;

  std::string to_string() const;

  // Deterministic total order on polynomials of a common ring: compare term
  // sequences (monomial first, then coefficient).
  static int compare(const Polynomial& a, const Polynomial& b);

private:
  void check_same_ring(const Polynomial& other) const;
  void check_term_cap() const;

  Ring ring_;
  TermMap terms_;
};

// Exact division f / g; throws InternalError if g does not divide f.
Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g);

// Multivariate gcd over Q via primitive pseudo-remainder sequences.  The
// result is primitive with positive leading coefficient; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Map a polynomial into `target`; index_map[i] is the target index of
// source variable i.
Polynomial lift_to_ring(const Polynomial& f, const Ring& target,
                        const std::vector<std::size_t>& index_map);

// f = sum_j coeff_j(x) * x_i^j as a dense coefficient list (index = j).
std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t i);

}  // namespace lintype

#include "lintype/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lintype/errors.hpp"
#include "lintype/limits.hpp"

namespace lintype {

Polynomial Polynomial::constant(const Ring& ring, const Rational& value) {
  Polynomial p(ring);
  if (value != 0) p.terms_.emplace(Monomial::one(ring.size()), value);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  if (i >= ring.size()) throw PreconditionError("variable index out of range");
  Polynomial p(ring);
  p.terms_.emplace(Monomial::variable(ring.size(), i), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m,
                            const Rational& coeff) {
  Polynomial p(ring);
  if (coeff != 0) p.terms_.emplace(m, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_unit_constant() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  check_term_cap();
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_)
    throw RingMismatchError("polynomials from different rings");
}

void Polynomial::check_term_cap() const {
  if (terms_.size() > Limits::term_cap)
    throw ResourceError("term cap exceeded (" +
                        std::to_string(Limits::term_cap) + " terms)");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return ring_ == other.ring_ && terms_ == other.terms_;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [mm, coeff] : terms_) r.terms_.emplace(mm.times(m), coeff * c);
  return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = Polynomial::constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = (e >>= 1UL) > 0 ? base * base : base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= ring_.size()) throw PreconditionError("variable index out of range");
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    r.terms_.emplace(m.with_exponent(i, e - 1), c * e);
  }
  return r;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::initial_degree() const {
  if (terms_.empty())
    throw PreconditionError("initial degree of the zero polynomial");
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
  return d;
}

int Polynomial::degree_in(std::size_t i) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::jet(int d) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace(m, c);
  return r;
}

std::pair<Polynomial, long> Polynomial::weighted_initial_part(
    const std::vector<int>& weights) const {
  if (terms_.empty())
    throw PreconditionError("weighted initial part of the zero polynomial");
  if (weights.size() != ring_.size())
    throw PreconditionError("weight vector length mismatch");
  for (int w : weights)
    if (w <= 0) throw PreconditionError("weights must be strictly positive");
  long d = terms_.begin()->first.weighted_degree(weights);
  for (const auto& [m, c] : terms_)
    d = std::min(d, m.weighted_degree(weights));
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_)
    if (m.weighted_degree(weights) == d) r.terms_.emplace(m, c);
  return {r, d};
}

Polynomial Polynomial::dehomogenize(std::size_t i) const {
  if (i >= ring_.size()) throw PreconditionError("variable index out of range");
  if (!is_homogeneous())
    throw PreconditionError("dehomogenize requires a homogeneous polynomial");
  Ring target = ring_.without(i);
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e;
    e.reserve(target.size());
    for (std::size_t j = 0; j < ring_.size(); ++j)
      if (j != i) e.push_back(m[j]);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial Polynomial::translate(const Point& p) const {
  if (p.projective) throw PreconditionError("translate requires an affine point");
  if (p.coords.size() != ring_.size())
    throw PreconditionError("point dimension mismatch");
  Polynomial cur = *this;
  for (std::size_t i = 0; i < ring_.size(); ++i) {
    const Rational& c = p.coords[i];
    if (c == 0) continue;
    // x_i^e -> (x_i + c)^e, expanded by the binomial theorem.
    Polynomial next(ring_);
    for (const auto& [m, coef] : cur.terms_) {
      int e = m[i];
      if (e == 0) {
        next.add_term(m, coef);
        continue;
      }
      for (int j = 0; j <= e; ++j) {
        Rational factor = Rational(binomial(static_cast<unsigned long>(e),
                                            static_cast<unsigned long>(j))) *
                          pow_rational(c, static_cast<unsigned long>(e - j));
        next.add_term(m.with_exponent(i, j), coef * factor);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Rational Polynomial::evaluate(const Point& p) const {
  if (p.coords.size() != ring_.size())
    throw PreconditionError("point dimension mismatch");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < ring_.size(); ++i)
      if (m[i] > 0) v *= pow_rational(p.coords[i], static_cast<unsigned long>(m[i]));
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(std::size_t i, const Rational& value) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    Rational v = e == 0 ? c : c * pow_rational(value, static_cast<unsigned long>(e));
    r.add_term(m.with_exponent(i, 0), v);
  }
  return r;
}

Polynomial Polynomial::zero_out(const std::vector<char>& mask) const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) {
    bool killed = false;
    for (std::size_t i = 0; i < ring_.size() && !killed; ++i)
      killed = mask[i] != 0 && m[i] > 0;
    if (!killed) r.add_term(m, c);
  }
  return r;
}

const Monomial& Polynomial::lead_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (order.greater(m, *best)) best = &m;
  return *best;
}

Rational Polynomial::lead_coeff(const MonomialOrder& order) const {
  return coeff(lead_monomial(order));
}

Rational Polynomial::content() const {
  Rational g(0);
  for (const auto& [m, c] : terms_) g = rational_content_gcd(g, c);
  return g == 0 ? Rational(1) : g;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Rational g = content();
  if (sign(terms_.begin()->second) < 0) g = -g;
  return scaled(1 / g);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sign(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sign(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    bool coeff_printed = false;
    if (a != 1 || m.is_one()) {
      os << lintype::to_string(a);
      coeff_printed = true;
    }
    bool any_var = false;
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (m[i] == 0) continue;
      if (coeff_printed || any_var) os << "*";
      os << ring_.name(i);
      if (m[i] > 1) os << "^" << m[i];
      any_var = true;
    }
  }
  return os.str();
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    int c = degrevlex_compare(ia->first, ib->first);
    if (c != 0) return c;
    int cc = cmp(ia->second, ib->second);
    if (cc != 0) return cc;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InternalError("exact division by zero");
  static const MonomialOrder drl = MonomialOrder::degrevlex();
  Polynomial rem = f;
  Polynomial q(f.ring());
  const Monomial& lg = g.lead_monomial(drl);
  Rational cg = g.coeff(lg);
  while (!rem.is_zero()) {
    const Monomial& lr = rem.lead_monomial(drl);
    if (!lg.divides(lr))
      throw InternalError("exact division has a remainder");
    Monomial u = lr.divided_by(lg);
    Rational c = rem.coeff(lr) / cg;
    q.add_term(u, c);
    rem = rem - g.times_monomial(u, c);
  }
  return q;
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t i) {
  int d = f.degree_in(i);
  std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1,
                              Polynomial::zero(f.ring()));
  for (const auto& [m, c] : f.terms())
    out[static_cast<std::size_t>(m[i])].add_term(m.with_exponent(i, 0), c);
  return out;
}

namespace {

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs,
                             std::size_t i, const Ring& ring) {
  Polynomial r(ring);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    for (const auto& [m, c] : coeffs[j].terms())
      r.add_term(m.with_exponent(i, static_cast<int>(j)), c);
  return r;
}

// Pseudo-remainder of a by b in the variable i: lc(b)^(da-db+1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b,
                            std::size_t i) {
  int db = b.degree_in(i);
  auto bc = coefficients_in(b, i);
  Polynomial lb = bc[static_cast<std::size_t>(db)];
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree_in(i) >= db) {
    int dr = rem.degree_in(i);
    auto rc = coefficients_in(rem, i);
    Polynomial lr = rc[static_cast<std::size_t>(dr)];
    // rem := lb*rem - lr*x_i^(dr-db)*b
    Polynomial shift = Polynomial::term(
        rem.ring(), Monomial::variable(rem.ring().size(), i, dr - db),
        Rational(1));
    rem = lb * rem - lr * shift * b;
    if (!rem.is_zero() && rem.degree_in(i) >= dr)
      throw InternalError("pseudo-division did not reduce the degree");
  }
  return rem;
}

Polynomial content_in(const Polynomial& f, std::size_t i) {
  Polynomial g = Polynomial::zero(f.ring());
  for (const auto& c : coefficients_in(f, i)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_unit_constant()) break;
  }
  return g;
}

Polynomial divide_coefficients(const Polynomial& f, const Polynomial& divisor,
                               std::size_t i) {
  auto coeffs = coefficients_in(f, i);
  for (auto& c : coeffs)
    if (!c.is_zero()) c = poly_exact_div(c, divisor);
  return from_coefficients(coeffs, i, f.ring());
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.primitive();
  if (g.is_zero()) return f.primitive();
  if (f.is_constant() || g.is_constant())
    return Polynomial::constant(f.ring(), 1);

  // Main variable: the highest index occurring in either operand.
  std::size_t main_var = 0;
  for (std::size_t i = f.ring().size(); i-- > 0;) {
    if (f.degree_in(i) > 0 || g.degree_in(i) > 0) {
      main_var = i;
      break;
    }
  }

  Polynomial cf = content_in(f, main_var);
  Polynomial cg = content_in(g, main_var);
  Polynomial c = poly_gcd(cf, cg);
  Polynomial a = divide_coefficients(f, cf, main_var).primitive();
  Polynomial b = divide_coefficients(g, cg, main_var).primitive();
  if (a.degree_in(main_var) < b.degree_in(main_var)) std::swap(a, b);

  // Primitive PRS.
  for (;;) {
    Polynomial r = pseudo_remainder(a, b, main_var);
    if (r.is_zero()) break;
    if (r.degree_in(main_var) == 0) {
      b = Polynomial::constant(f.ring(), 1);
      break;
    }
    a = b;
    Polynomial cr = content_in(r, main_var);
    b = divide_coefficients(r, cr, main_var).primitive();
  }
  if (b.is_constant()) return c;
  return (c * b).primitive();
}

Polynomial lift_to_ring(const Polynomial& f, const Ring& target,
                        const std::vector<std::size_t>& index_map) {
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) e[index_map[i]] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace lintype

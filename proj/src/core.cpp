// Rationals, rings, monomials, points, resource limits.

#include <algorithm>
#include <set>
#include <sstream>

#include "lintype/errors.hpp"
#include "lintype/limits.hpp"
#include "lintype/monomial.hpp"
#include "lintype/point.hpp"
#include "lintype/rational.hpp"
#include "lintype/ring.hpp"

namespace lintype {

std::size_t Limits::term_cap = 1000000;
long Limits::reduction_step_cap = 5000000;
long Limits::pair_cap = 1000000;
int Limits::saturation_cap = 50;

Rational rational_from_string(const std::string& text) {
  try {
    Rational q(text, 10);
    q.canonicalize();
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow_rational(const Rational& base, unsigned long exponent) {
  Rational result(1);
  Rational b = base;
  unsigned long e = exponent;
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1UL;
  }
  return result;
}

Rational rational_content_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num, den;
  mpz_gcd(num.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return abs(g);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Ring::Ring(std::vector<std::string> names)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  std::set<std::string> seen;
  for (const auto& v : *vars_) {
    if (v.empty()) throw InputError("empty variable name");
    if (!seen.insert(v).second)
      throw InputError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  return std::nullopt;
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = *vars_;
  names.insert(names.end(), extra.begin(), extra.end());
  return Ring(std::move(names));
}

Ring Ring::without(std::size_t i) const {
  std::vector<std::string> names = *vars_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
  return Ring(std::move(names));
}

std::vector<std::string> Ring::fresh_names(const std::string& stem,
                                           std::size_t count) const {
  std::string prefix = stem;
  for (;;) {
    bool clash = false;
    for (std::size_t i = 1; i <= count && !clash; ++i)
      clash = index_of(prefix + std::to_string(i)).has_value();
    if (!clash) break;
    prefix += "_";
  }
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_) {
    if (x < 0) throw InternalError("negative exponent in monomial");
    deg_ += x;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power) {
  Monomial m(nvars);
  m.e_[i] = power;
  m.deg_ = power;
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
  r.deg_ += other.deg_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= other.e_[i];
    if (r.e_[i] < 0) throw InternalError("monomial division with remainder");
  }
  r.deg_ -= other.deg_;
  return r;
}

Monomial Monomial::with_exponent(std::size_t i, int value) const {
  Monomial r = *this;
  r.deg_ += value - r.e_[i];
  r.e_[i] = value;
  return r;
}

long Monomial::weighted_degree(const std::vector<int>& weights) const {
  long d = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    d += static_cast<long>(weights[i]) * e_[i];
  return d;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  int deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    deg += r.e_[i];
  }
  r.deg_ = deg;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  int deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    deg += r.e_[i];
  }
  r.deg_ = deg;
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.e_[i] > 0 && b.e_[i] > 0) return false;
  return true;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

Point Point::affine(std::vector<Rational> coords) {
  Point p;
  p.coords = std::move(coords);
  p.projective = false;
  return p;
}

Point Point::projective_point(std::vector<Rational> coords) {
  std::size_t last = coords.size();
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] != 0) {
      last = i;
      break;
    }
  }
  if (last == coords.size())
    throw PreconditionError("projective point with all coordinates zero");
  Rational scale = coords[last];
  Point p;
  p.coords.reserve(coords.size());
  for (auto& c : coords) p.coords.push_back(c / scale);
  p.projective = true;
  return p;
}

bool Point::is_origin() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

bool Point::operator<(const Point& other) const {
  if (projective != other.projective) return !projective;
  for (std::size_t i = 0; i < std::min(coords.size(), other.coords.size()); ++i) {
    int c = cmp(coords[i], other.coords[i]);
    if (c != 0) return c < 0;
  }
  return coords.size() < other.coords.size();
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << (projective ? "[" : "(");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) os << (projective ? ":" : ", ");
    os << lintype::to_string(coords[i]);
  }
  os << (projective ? "]" : ")");
  return os.str();
}

bool projective_equivalent(const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size()) return false;
  return Point::projective_point(a.coords) == Point::projective_point(b.coords);
}

}  // namespace lintype

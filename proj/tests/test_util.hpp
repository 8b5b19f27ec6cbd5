// Shared helpers for the test suites: deterministic random polynomials and
// small parsing shortcuts.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "lintype/parser.hpp"
#include "lintype/polynomial.hpp"

namespace testutil {

inline lintype::Ring ring_xy() { return lintype::Ring({"x", "y"}); }
inline lintype::Ring ring_xyz() { return lintype::Ring({"x", "y", "z"}); }
inline lintype::Ring ring_xyzw() { return lintype::Ring({"x", "y", "z", "w"}); }

inline lintype::Polynomial P(const std::string& text, const lintype::Ring& ring) {
  return lintype::parse_polynomial(text, ring);
}

class RandomPolys {
public:
  explicit RandomPolys(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  lintype::Rational coefficient() {
    int num = uniform(-6, 6);
    if (num == 0) num = 1;
    int den = uniform(1, 4);
    lintype::Rational q(num, den);
    q.canonicalize();
    return q;
  }

  lintype::Monomial monomial(std::size_t nvars, int max_deg) {
    std::vector<int> e(nvars, 0);
    int budget = uniform(0, max_deg);
    for (int k = 0; k < budget; ++k)
      e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))] += 1;
    return lintype::Monomial(e);
  }

  lintype::Polynomial polynomial(const lintype::Ring& ring, int max_deg,
                                 int max_terms) {
    lintype::Polynomial p(ring);
    int nterms = uniform(1, max_terms);
    for (int t = 0; t < nterms; ++t)
      p.add_term(monomial(ring.size(), max_deg), coefficient());
    return p;
  }

  lintype::Polynomial homogeneous(const lintype::Ring& ring, int deg,
                                  int max_terms) {
    lintype::Polynomial p(ring);
    int nterms = uniform(1, max_terms);
    for (int t = 0; t < nterms; ++t) {
      std::vector<int> e(ring.size(), 0);
      for (int k = 0; k < deg; ++k)
        e[static_cast<std::size_t>(uniform(0, static_cast<int>(ring.size()) - 1))] += 1;
      p.add_term(lintype::Monomial(e), coefficient());
    }
    return p;
  }

private:
  std::mt19937 rng_;
};

}  // namespace testutil

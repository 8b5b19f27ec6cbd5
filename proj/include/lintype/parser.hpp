#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lintype/polynomial.hpp"
#include "lintype/ring.hpp"

namespace lintype {

// Polynomial text grammar: variables are identifiers, `^` for powers, `*`
// optional between factors, integer and `p/q` rational coefficients,
// parentheses allowed.  Guaranteed round trip: parse(print(f)) == f.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

// Input file format: one statement per line, each terminated by `;`.
//   ring x, y, z;
//   f = (x^2 - y^2)^3 - x^2*y^2*z^2;
struct SessionFile {
  Ring ring;
  std::vector<std::pair<std::string, Polynomial>> polynomials;

  const Polynomial& lookup(const std::string& name) const;
};

SessionFile parse_session(const std::string& text);

}  // namespace lintype

#pragma once

#include <string>
#include <vector>

#include "lintype/rational.hpp"

namespace lintype {

// Rational point, affine or projective.  Projective coordinates are kept
// normalized with the last nonzero coordinate equal to 1, so equality is a
// plain coordinate comparison.
struct Point {
  std::vector<Rational> coords;
  bool projective = false;

  static Point affine(std::vector<Rational> coords);
  // Normalizes; throws PreconditionError if all coordinates vanish.
  static Point projective_point(std::vector<Rational> coords);

  std::size_t size() const { return coords.size(); }
  bool is_origin() const;

  bool operator==(const Point& other) const {
    return projective == other.projective && coords == other.coords;
  }
  bool operator<(const Point& other) const;  // lexicographic, for sorting

  std::string to_string() const;  // "(1, -1/2)" or "[0:0:1]"
};

// Same projective point up to scaling (operands need not be normalized).
bool projective_equivalent(const Point& a, const Point& b);

}  // namespace lintype

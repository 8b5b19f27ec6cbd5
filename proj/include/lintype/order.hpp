#pragma once

#include <string>
#include <vector>

#include "lintype/monomial.hpp"

namespace lintype {

enum class OrderKind {
  DegRevLex,      // global
  Lex,            // global
  NegDegRevLex,   // local: 1 is the largest monomial
  Weighted,       // positive weights, degrevlex tie-break; global
  Block,          // elimination block first, degrevlex inside each block
};

// Total order on exponent vectors.  Global kinds are well-orders with 1 the
// smallest monomial; local kinds have 1 as the largest monomial.  Block
// orders eliminate exactly the masked variable group: any monomial touching
// an eliminated variable exceeds every monomial free of them.
class MonomialOrder {
public:
  static MonomialOrder degrevlex();
  static MonomialOrder lex();
  static MonomialOrder negdegrevlex();
  static MonomialOrder weighted(std::vector<int> weights);
  // mask[i] != 0 marks variable i as eliminated (first block).
  static MonomialOrder elimination_block(std::vector<char> mask);

  OrderKind kind() const { return kind_; }
  bool global() const;
  bool local() const { return !global(); }

  int compare(const Monomial& a, const Monomial& b) const;  // 1, 0, -1
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  const std::vector<char>& elimination_mask() const { return mask_; }

  std::string name() const;
  // Stable key for caching bases per order.
  std::string cache_key() const;

private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  OrderKind kind_;
  std::vector<int> weights_;
  std::vector<char> mask_;
};

}  // namespace lintype

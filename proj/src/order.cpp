#include "lintype/order.hpp"

#include <sstream>

#include "lintype/errors.hpp"

namespace lintype {

namespace {

// degrevlex tie-break shared by several kinds: last nonzero entry of a - b
// negative means a > b.
int revlex_tail(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

// degrevlex restricted to the variables selected by `mask` (want != 0
// selects the first block, == 0 the complement).
int masked_degrevlex(const Monomial& a, const Monomial& b,
                     const std::vector<char>& mask, bool want) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((mask[i] != 0) == want) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if ((mask[i] != 0) != want) continue;
    int d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }
MonomialOrder MonomialOrder::lex() { return MonomialOrder(OrderKind::Lex); }
MonomialOrder MonomialOrder::negdegrevlex() {
  return MonomialOrder(OrderKind::NegDegRevLex);
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights) {
  for (int w : weights)
    if (w <= 0) throw PreconditionError("weighted order requires positive weights");
  MonomialOrder o(OrderKind::Weighted);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::elimination_block(std::vector<char> mask) {
  bool any = false;
  for (char c : mask) any = any || c != 0;
  if (!any) return degrevlex();
  MonomialOrder o(OrderKind::Block);
  o.mask_ = std::move(mask);
  return o;
}

bool MonomialOrder::global() const { return kind_ != OrderKind::NegDegRevLex; }

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::DegRevLex: {
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tail(a, b);
    }
    case OrderKind::Lex: {
      for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    }
    case OrderKind::NegDegRevLex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_tail(a, b);
    }
    case OrderKind::Weighted: {
      long wa = a.weighted_degree(weights_);
      long wb = b.weighted_degree(weights_);
      if (wa != wb) return wa > wb ? 1 : -1;
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tail(a, b);
    }
    case OrderKind::Block: {
      int c = masked_degrevlex(a, b, mask_, true);
      if (c != 0) return c;
      return masked_degrevlex(a, b, mask_, false);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::NegDegRevLex: return "negdegrevlex";
    case OrderKind::Weighted: return "weighted";
    case OrderKind::Block: return "block";
  }
  return "?";
}

std::string MonomialOrder::cache_key() const {
  std::ostringstream os;
  os << name();
  for (int w : weights_) os << ":" << w;
  for (char m : mask_) os << (m ? '1' : '0');
  return os.str();
}

}  // namespace lintype

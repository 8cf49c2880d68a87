#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "dalg/monomial.hpp"

namespace dalg {

/// Total order on monomials compatible with multiplication.
///
/// Variables are ranked by natural VarKey priority unless an explicit ranking
/// is given (listed variables first, in the listed order, then every other
/// variable by natural priority). A block order compares the front block
/// with grevlex first and breaks ties with grevlex on the remaining
/// variables, so a Groebner basis under it contains a basis of the
/// elimination ideal of the front block.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex(std::vector<VarKey> ranking = {});
  static MonomialOrder grevlex(std::vector<VarKey> ranking = {});
  static MonomialOrder block(std::vector<VarKey> front, std::vector<VarKey> ranking = {});

  Kind kind() const { return kind_; }
  const std::vector<VarKey>& front() const { return front_; }
  const std::vector<VarKey>& ranking() const { return ranking_; }

  bool in_front(VarKey v) const;
  /// Variable ranking used by this order; `greater` means higher priority.
  std::strong_ordering compare_vars(VarKey a, VarKey b) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  /// Sorts variables into descending priority under this order.
  std::vector<VarKey> sorted_desc(std::vector<VarKey> vars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<VarKey> front, std::vector<VarKey> ranking);

  Kind kind_;
  std::vector<VarKey> front_;    // sorted by natural priority
  std::vector<VarKey> ranking_;  // explicit ranking, highest first
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

OrderPtr make_order(MonomialOrder order);
/// Shared graded-reverse-lexicographic order with natural ranking.
const OrderPtr& default_order();
/// Shared lexicographic order with natural ranking; the ambient order of
/// differential polynomials (highest derivative dominates).
const OrderPtr& ranking_order();

inline bool same_order(const OrderPtr& a, const OrderPtr& b) {
  return a == b || *a == *b;
}

}  // namespace dalg

#pragma once

#include <cstddef>
#include <vector>

#include "dalg/mpoly.hpp"

namespace dalg {

/// Generators of a polynomial ideal together with its ambient variables.
/// An empty variable list means "the variables occurring in the generators".
struct IdealHandle {
  std::vector<MPoly> generators;
  std::vector<VarKey> variables;

  /// Declared variables united with those occurring, natural priority descending.
  std::vector<VarKey> ambient() const;
};

class GroebnerBasis {
 public:
  /// Basis of the zero ideal.
  GroebnerBasis() : order_(default_order()), reduced_(true) {}
  GroebnerBasis(std::vector<MPoly> generators, OrderPtr order, std::vector<VarKey> variables, bool reduced);

  const std::vector<MPoly>& generators() const { return generators_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<VarKey>& variables() const { return variables_; }
  bool reduced() const { return reduced_; }

  bool is_unit() const;
  bool is_zero_ideal() const { return generators_.empty(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  std::vector<MPoly> generators_;
  OrderPtr order_;
  std::vector<VarKey> variables_;
  bool reduced_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_peak = 0;
};

/// Reduced Groebner basis by Buchberger's algorithm with the normal pair
/// selection strategy and the Gebauer-Moeller criteria. Generators are monic
/// and sorted by descending leading monomial, so the output does not depend
/// on the input order.
GroebnerBasis buchberger(const IdealHandle& ideal, const OrderPtr& order = default_order(),
                         GroebnerStats* stats = nullptr);

/// Remainder of f modulo the basis (zero iff f lies in the ideal).
MPoly normal_form(const MPoly& f, const GroebnerBasis& gb);
bool ideal_member(const MPoly& f, const GroebnerBasis& gb);

MPoly s_polynomial(const MPoly& f, const MPoly& g);

/// Reduced basis of the ideal intersected with Q[keep], via a block order
/// placing the eliminated variables first. The result uses that block order.
GroebnerBasis eliminate(const IdealHandle& ideal, const std::vector<VarKey>& keep, GroebnerStats* stats = nullptr);

/// A variable not occurring in the ideal, used as the inverse of a saturating element.
VarKey fresh_auxiliary(const IdealHandle& ideal);

/// Generators of (ideal : s^infinity), adjoining t*s - 1 and eliminating t.
/// Throws Error(zero_saturation) when s is zero.
IdealHandle saturate(const IdealHandle& ideal, const MPoly& s);

/// The Rabinowitsch ideal ideal + (t*s - 1) in the ambient variables plus t.
IdealHandle rabinowitsch(const IdealHandle& ideal, const MPoly& s, VarKey t);

/// Krull dimension of the quotient ring: the size of a largest set of
/// variables containing no leading monomial of the basis. Throws
/// Error(empty_variety) for the unit ideal.
std::size_t dimension(const GroebnerBasis& gb);
std::vector<VarKey> maximal_independent_set(const GroebnerBasis& gb);

/// True when some basis element has its leading monomial inside Q[vars].
/// When false, the ideal meets Q[vars] only in 0, for any monomial order.
bool has_leading_monomial_in(const GroebnerBasis& gb, const std::vector<VarKey>& vars);

}  // namespace dalg

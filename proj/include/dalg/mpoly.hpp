#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dalg/monomial.hpp"
#include "dalg/order.hpp"
#include "dalg/rational.hpp"

namespace dalg {

using VarNamer = std::function<std::string(VarKey)>;

/// Fallback variable names: v<symbol>_<jet>, p<symbol>, t<symbol>.
std::string default_var_name(VarKey v);

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// strictly descending under the polynomial's monomial order, with no zero
/// coefficients and no repeated monomials. The zero polynomial has no terms.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly();
  explicit MPoly(OrderPtr order);

  /// Merges duplicates, drops zeros, sorts under `order`.
  static MPoly normalize(std::vector<Term> raw, OrderPtr order);
  static MPoly constant(const Rat& c, OrderPtr order = default_order());
  static MPoly variable(VarKey v, OrderPtr order = default_order());
  static MPoly monomial(const Monomial& m, const Rat& c, OrderPtr order = default_order());

  const std::vector<Term>& terms() const { return terms_; }
  const OrderPtr& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rat& leading_coefficient() const;
  /// Coefficient of the monomial 1.
  Rat constant_term() const;
  Rat coefficient(const Monomial& m) const;

  std::uint32_t total_degree() const;
  std::uint32_t degree(VarKey v) const;
  /// Sorted in descending natural priority.
  std::vector<VarKey> variables() const;
  bool involves(VarKey v) const;

  /// Coefficient of v^d viewing the polynomial as univariate in v.
  MPoly coefficient_of(VarKey v, std::uint32_t d) const;
  /// Formal partial derivative.
  MPoly partial(VarKey v) const;
  /// Re-sorts under another order.
  MPoly with_order(OrderPtr order) const;
  /// Applies a variable renaming; the map must be injective on variables().
  MPoly rename(const std::function<VarKey(VarKey)>& f) const;
  /// Substitutes polynomials for variables (missing variables stay).
  MPoly substitute(const std::map<VarKey, MPoly>& values) const;

  /// Integer content times sign: dividing by it yields a primitive integer
  /// polynomial with positive leading coefficient. Zero for the zero polynomial.
  Rat content() const;
  MPoly primitive() const;
  MPoly monic() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  MPoly mul_term(const Monomial& m, const Rat& c) const;
  MPoly pow(std::uint32_t e) const;

  /// Exact division; nullopt when `divisor` does not divide this polynomial.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string to_string(const VarNamer& namer = default_var_name) const;

 private:
  std::vector<Term> terms_;
  OrderPtr order_;
};

MPoly mpoly_normalize(std::vector<MPoly::Term> raw, OrderPtr order);
MPoly mpoly_mul(const MPoly& a, const MPoly& b);

struct PseudoDivision {
  MPoly quotient;
  MPoly remainder;
  std::uint32_t exponent = 0;
};

/// lc_v(g)^exponent * f = quotient * g + remainder with deg_v(remainder) <
/// deg_v(g). Throws Error(degenerate_divisor) when deg_v(g) = 0.
PseudoDivision pseudo_divide(const MPoly& f, const MPoly& g, VarKey v);

/// Rational point evaluation; throws Error(unbound_variable) on a missing key.
Rat evaluate(const MPoly& p, const std::map<VarKey, Rat>& point);

}  // namespace dalg

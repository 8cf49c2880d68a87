#pragma once

#include "dalg/diffpoly.hpp"

namespace dalg {

/// Quotient numer/denom of differential polynomials. A constant denominator
/// is folded into the numerator (denominator 1). Otherwise construction scales
/// both parts so the numerator is a primitive integer polynomial and the
/// denominator has positive leading coefficient,
/// and cancels a common monomial factor and exact polynomial quotients.
class DiffRational {
 public:
  DiffRational();
  explicit DiffRational(const DiffPoly& numer);
  /// Throws Error(invalid_argument) when denom is zero.
  DiffRational(const DiffPoly& numer, const DiffPoly& denom);

  const DiffPoly& numer() const { return numer_; }
  const DiffPoly& denom() const { return denom_; }
  const SignaturePtr& signature() const { return numer_.signature(); }
  bool is_zero() const { return numer_.is_zero(); }
  bool is_polynomial() const { return denom_.body().is_constant(); }

  /// ord(denom) < ord(numer) with respect to the indeterminate; required of
  /// anything used as a differential algebraic equation.
  bool satisfies_equation_invariant(std::uint32_t indeterminate = 0) const;
  /// Throws Error(invalid_argument) if the invariant fails.
  const DiffRational& require_equation(std::uint32_t indeterminate = 0) const;

  DiffRational operator-() const;
  friend DiffRational operator+(const DiffRational& a, const DiffRational& b);
  friend DiffRational operator-(const DiffRational& a, const DiffRational& b);
  friend DiffRational operator*(const DiffRational& a, const DiffRational& b);
  /// Throws Error(invalid_argument) on division by zero.
  friend DiffRational operator/(const DiffRational& a, const DiffRational& b);
  DiffRational pow(std::uint32_t e) const;

  /// Quotient rule.
  DiffRational derivative() const;

  /// Cross-multiplication: a.numer * b.denom == b.numer * a.denom.
  friend bool operator==(const DiffRational& a, const DiffRational& b);

 private:
  DiffPoly numer_;
  DiffPoly denom_;
};

}  // namespace dalg

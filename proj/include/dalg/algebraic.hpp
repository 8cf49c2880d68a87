#pragma once

#include <vector>

#include "dalg/diffrational.hpp"

namespace dalg {

/// Polynomial in an algebraic variable T; coefficient i multiplies T^i.
using AlgebraicPoly = std::vector<DiffRational>;

/// Derivative of a root a of `min_poly` in the quotient ring modulo min_poly:
///   delta(a) = -m^delta(a) * (dm/dT)(a)^{-1},
/// where m^delta differentiates each coefficient. Returns the coefficients of
/// a polynomial in T of degree < deg(min_poly). Throws
/// Error(inseparable_or_not_squarefree) when dm/dT is not invertible.
AlgebraicPoly algebraic_derivative(const std::vector<DiffPoly>& min_poly);

}  // namespace dalg

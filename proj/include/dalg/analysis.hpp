#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dalg/diffrational.hpp"
#include "dalg/groebner.hpp"

namespace dalg {

using DiffMatrix = std::vector<std::vector<DiffPoly>>;

/// Entry (i, j) is D^i(f_j).
DiffMatrix wronskian_matrix(const std::vector<DiffPoly>& fs);
/// Exact determinant of a square matrix (Laplace expansion with memoized minors).
DiffPoly determinant(const DiffMatrix& m);

enum class LinearVerdict { independent, dependent, undecided };
std::string to_string(LinearVerdict v);

struct WronskianReport {
  DiffMatrix matrix;
  DiffPoly determinant;
  /// The determinant after Ritt reduction by the constraint (equal to
  /// `determinant` when no constraint is given).
  DiffPoly reduced_determinant;
  LinearVerdict verdict = LinearVerdict::undecided;
  /// Rational coefficients c with sum c_j f_j = 0 (or in I(P) under a
  /// constraint P); set exactly when the verdict is dependent.
  std::vector<Rat> relation;
};

/// Linear independence over the constants via the Wronskian. Under a
/// constraint P (asserted irreducible) everything is read modulo I(P).
WronskianReport constants_linear_independence(const std::vector<DiffPoly>& fs,
                                              const std::optional<DiffPoly>& modulo = std::nullopt);

/// Distinct squarefree factors whose product has the same radical as the
/// product of the inputs. Monomial factors are split into variables and
/// univariate parts are made squarefree; other parts are kept whole.
std::vector<MPoly> saturation_factors(const std::vector<MPoly>& polys);

struct TrdegReport {
  std::uint32_t order = 0;
  std::uint32_t k = 0;
  std::size_t dimension = 0;
  std::size_t expected_dimension = 0;
  /// Basis of the saturated prolongation ideal intersected with the jets of
  /// order below the equation's order (expected: the zero ideal).
  GroebnerBasis low_order_relations;
  bool pass = false;
};

/// Builds the ideal of prolong(numer, k) in the jets u .. u^(n+k), saturates
/// by the separant and the denominator, and reports the Krull dimension and
/// the low-order elimination ideal. Parameters are treated as independent
/// transcendentals, so the expected dimension is n plus the parameter count.
/// Throws Error(equation_inconsistent) for the unit ideal.
TrdegReport generic_trdeg_check(const DiffRational& eq, std::uint32_t k);

enum class WitnessOutcome { refutes, inconsistent_at, forces_algebraic };
std::string to_string(WitnessOutcome o);

struct WitnessVerdict {
  WitnessOutcome outcome = WitnessOutcome::refutes;
  std::uint32_t k = 0;
  /// refutes: reduced basis of the saturated ideal on the jets left after
  /// solving the leaders u^(n+j) (linear with the separant as coefficient).
  /// inconsistent_at: the unit basis. forces_algebraic: the elimination basis.
  GroebnerBasis evidence;
  /// forces_algebraic: the copy whose base coordinate is forced, and the relation.
  std::optional<std::uint32_t> forced_copy;
  std::optional<MPoly> relation;
  /// Ring of the m copies, used to print the evidence.
  SignaturePtr copies;

  std::string label() const;
};

/// Ring of m copies of the equation's indeterminate. Default names are
/// x, y, z, w for m <= 4 and x1, ..., xm otherwise. Parameters are kept.
SignaturePtr witness_signature(const DiffRational& eq, std::uint32_t m, std::vector<std::string> names = {});

/// Bounded check of a candidate relation among m solutions. Throws
/// Error(trivial_witness) when the relation is zero, and
/// Error(invalid_argument) when it is not a polynomial in the base jets
/// (order < n) of the m copies.
WitnessVerdict dm_witness_check(const DiffRational& eq, std::uint32_t m, const DiffPoly& relation, std::uint32_t k);

/// First-order matrix form of D^n(X) + sum_i b_i D^i(X) = 0.
struct CompanionSystem {
  std::vector<std::vector<DiffRational>> matrix;
  std::vector<DiffRational> coefficients;

  /// D^n(X) + sum_i b_i D^i(X) as a rational differential expression in u.
  DiffRational holonomic() const;
};

/// Coefficients b_0 .. b_{n-1} must be free of jets (Error(invalid_argument)).
CompanionSystem companion_system(const std::vector<DiffRational>& coeffs);

}  // namespace dalg

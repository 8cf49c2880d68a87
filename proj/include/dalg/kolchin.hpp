#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dalg/diffpoly.hpp"
#include "dalg/diffrational.hpp"

namespace dalg {

/// Quantifier-free boolean combination of differential polynomial equations
/// and inequations. There is no quantifier node, so only the differentially
/// constructible fragment is representable.
class KolchinFormula {
 public:
  enum class Kind { equals_zero, nonzero, conjunction, disjunction, negation };

  static KolchinFormula eq(DiffPoly p);
  static KolchinFormula ne(DiffPoly p);
  static KolchinFormula all(std::vector<KolchinFormula> parts);
  static KolchinFormula any(std::vector<KolchinFormula> parts);
  static KolchinFormula negate(KolchinFormula inner);

  Kind kind() const { return kind_; }
  /// The atom's polynomial; only meaningful for equals_zero / nonzero.
  const DiffPoly& polynomial() const { return atom_; }
  const std::vector<KolchinFormula>& children() const { return children_; }

  /// Pushes negations down to the atoms (De Morgan); the result has no
  /// negation nodes.
  KolchinFormula negation_normal_form() const;
  std::vector<DiffPoly> atoms() const;
  std::string to_string() const;

 private:
  KolchinFormula(Kind kind, DiffPoly atom, std::vector<KolchinFormula> children)
      : kind_(kind), atom_(std::move(atom)), children_(std::move(children)) {}

  Kind kind_;
  DiffPoly atom_;
  std::vector<KolchinFormula> children_;
};

KolchinFormula operator&&(KolchinFormula a, KolchinFormula b);
KolchinFormula operator||(KolchinFormula a, KolchinFormula b);
KolchinFormula operator!(KolchinFormula a);

/// Throws Error(unbound_variable) when the jet misses a variable of some atom.
bool eval_formula(const KolchinFormula& phi, const JetPoint& jet);

/// numer(jet) = 0 and denom(jet) != 0.
bool is_solution(const DiffRational& eq, const JetPoint& jet);

/// The formula numer = 0 and denom != 0.
KolchinFormula solution_formula(const DiffRational& eq);

}  // namespace dalg

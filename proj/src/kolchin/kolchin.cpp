#include "dalg/kolchin.hpp"

#include "dalg/error.hpp"

namespace dalg {

KolchinFormula KolchinFormula::eq(DiffPoly p) { return {Kind::equals_zero, std::move(p), {}}; }

KolchinFormula KolchinFormula::ne(DiffPoly p) { return {Kind::nonzero, std::move(p), {}}; }

KolchinFormula KolchinFormula::all(std::vector<KolchinFormula> parts) {
  return {Kind::conjunction, DiffPoly(), std::move(parts)};
}

KolchinFormula KolchinFormula::any(std::vector<KolchinFormula> parts) {
  return {Kind::disjunction, DiffPoly(), std::move(parts)};
}

KolchinFormula KolchinFormula::negate(KolchinFormula inner) { return {Kind::negation, DiffPoly(), {std::move(inner)}}; }

KolchinFormula operator&&(KolchinFormula a, KolchinFormula b) {
  return KolchinFormula::all({std::move(a), std::move(b)});
}

KolchinFormula operator||(KolchinFormula a, KolchinFormula b) {
  return KolchinFormula::any({std::move(a), std::move(b)});
}

KolchinFormula operator!(KolchinFormula a) { return KolchinFormula::negate(std::move(a)); }

namespace {

KolchinFormula nnf(const KolchinFormula& f, bool negated) {
  using Kind = KolchinFormula::Kind;
  switch (f.kind()) {
    case Kind::equals_zero:
      return negated ? KolchinFormula::ne(f.polynomial()) : KolchinFormula::eq(f.polynomial());
    case Kind::nonzero:
      return negated ? KolchinFormula::eq(f.polynomial()) : KolchinFormula::ne(f.polynomial());
    case Kind::negation:
      return nnf(f.children().front(), !negated);
    case Kind::conjunction:
    case Kind::disjunction: {
      std::vector<KolchinFormula> parts;
      for (const auto& c : f.children()) parts.push_back(nnf(c, negated));
      bool conj = (f.kind() == Kind::conjunction) != negated;
      return conj ? KolchinFormula::all(std::move(parts)) : KolchinFormula::any(std::move(parts));
    }
  }
  return f;
}

}  // namespace

KolchinFormula KolchinFormula::negation_normal_form() const { return nnf(*this, false); }

std::vector<DiffPoly> KolchinFormula::atoms() const {
  if (kind_ == Kind::equals_zero || kind_ == Kind::nonzero) return {atom_};
  std::vector<DiffPoly> out;
  for (const auto& c : children_) {
    auto sub = c.atoms();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string KolchinFormula::to_string() const {
  switch (kind_) {
    case Kind::equals_zero: return "(" + atom_.to_string() + " = 0)";
    case Kind::nonzero: return "(" + atom_.to_string() + " != 0)";
    case Kind::negation: return "!" + children_.front().to_string();
    case Kind::conjunction:
    case Kind::disjunction: {
      if (children_.empty()) return kind_ == Kind::conjunction ? "true" : "false";
      std::string sep = kind_ == Kind::conjunction ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) out += (i ? sep : "") + children_[i].to_string();
      return out + ")";
    }
  }
  return "";
}

bool eval_formula(const KolchinFormula& phi, const JetPoint& jet) {
  using Kind = KolchinFormula::Kind;
  switch (phi.kind()) {
    case Kind::equals_zero: return sgn(evaluate(phi.polynomial(), jet)) == 0;
    case Kind::nonzero: return sgn(evaluate(phi.polynomial(), jet)) != 0;
    case Kind::negation: return !eval_formula(phi.children().front(), jet);
    case Kind::conjunction: {
      // Every atom is evaluated so unbound variables are always reported.
      bool value = true;
      for (const auto& c : phi.children()) value = eval_formula(c, jet) && value;
      return value;
    }
    case Kind::disjunction: {
      bool value = false;
      for (const auto& c : phi.children()) value = eval_formula(c, jet) || value;
      return value;
    }
  }
  return false;
}

bool is_solution(const DiffRational& eq, const JetPoint& jet) {
  Rat n = evaluate(eq.numer(), jet);
  Rat d = evaluate(eq.denom(), jet);
  return sgn(n) == 0 && sgn(d) != 0;
}

KolchinFormula solution_formula(const DiffRational& eq) {
  return KolchinFormula::eq(eq.numer()) && KolchinFormula::ne(eq.denom());
}

}  // namespace dalg

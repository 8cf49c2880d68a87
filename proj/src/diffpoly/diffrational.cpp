#include "dalg/diffrational.hpp"

#include <algorithm>

#include "dalg/error.hpp"

namespace dalg {

namespace {

// Largest monomial dividing every term of both polynomials.
Monomial common_monomial(const MPoly& a, const MPoly& b) {
  std::optional<Monomial> g;
  auto fold = [&g](const MPoly& p) {
    for (const auto& [m, c] : p.terms()) {
      if (!g) {
        g = m;
        continue;
      }
      std::vector<Monomial::Entry> kept;
      for (const auto& [v, e] : g->entries()) {
        auto d = std::min(e, m.degree(v));
        if (d > 0) kept.emplace_back(v, d);
      }
      g = Monomial::from_entries(std::move(kept));
    }
  };
  fold(a);
  fold(b);
  return g.value_or(Monomial());
}

}  // namespace

DiffRational::DiffRational() : DiffRational(DiffPoly()) {}

DiffRational::DiffRational(const DiffPoly& numer)
    : DiffRational(numer, DiffPoly::constant(numer.signature(), 1)) {}

DiffRational::DiffRational(const DiffPoly& numer, const DiffPoly& denom) : numer_(numer), denom_(denom) {
  if (!same_signature(numer.signature(), denom.signature()))
    throw Error(ErrorCode::signature_mismatch, "numerator and denominator from different rings");
  if (denom_.is_zero()) throw Error(ErrorCode::invalid_argument, "zero denominator");
  const SignaturePtr& sig = numer_.signature();
  if (numer_.is_zero()) {
    denom_ = DiffPoly::constant(sig, 1);
    return;
  }
  Monomial g = common_monomial(numer_.body(), denom_.body());
  if (!g.is_one()) {
    numer_ = DiffPoly(sig, *numer_.body().divide_exact(MPoly::monomial(g, 1, ranking_order())));
    denom_ = DiffPoly(sig, *denom_.body().divide_exact(MPoly::monomial(g, 1, ranking_order())));
  }
  if (!denom_.body().is_constant()) {
    if (auto q = numer_.body().divide_exact(denom_.body())) {
      numer_ = DiffPoly(sig, *q);
      denom_ = DiffPoly::constant(sig, 1);
    } else if (auto r = denom_.body().divide_exact(numer_.body())) {
      numer_ = DiffPoly::constant(sig, 1);
      denom_ = DiffPoly(sig, *r);
    }
  }
  if (denom_.body().is_constant()) {
    numer_ = numer_ * (1 / denom_.body().constant_term());
    denom_ = DiffPoly::constant(sig, 1);
    return;
  }
  Rat c = abs(numer_.body().content());
  if (sgn(denom_.body().leading_coefficient()) < 0) c = -c;
  Rat inv = 1 / c;
  numer_ = numer_ * inv;
  denom_ = denom_ * inv;
}

bool DiffRational::satisfies_equation_invariant(std::uint32_t indeterminate) const {
  auto n = numer_.order(indeterminate);
  if (!n) return false;
  auto d = denom_.order(indeterminate);
  return !d || *d < *n;
}

const DiffRational& DiffRational::require_equation(std::uint32_t indeterminate) const {
  if (!satisfies_equation_invariant(indeterminate))
    throw Error(ErrorCode::invalid_argument, "equation requires ord(denominator) < ord(numerator), got " +
                                                 numer_.to_string() + " over " + denom_.to_string());
  return *this;
}

DiffRational DiffRational::operator-() const { return DiffRational(-numer_, denom_); }

DiffRational operator+(const DiffRational& a, const DiffRational& b) {
  if (a.denom_ == b.denom_) return DiffRational(a.numer_ + b.numer_, a.denom_);
  return DiffRational(a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_);
}

DiffRational operator-(const DiffRational& a, const DiffRational& b) { return a + (-b); }

DiffRational operator*(const DiffRational& a, const DiffRational& b) {
  return DiffRational(a.numer_ * b.numer_, a.denom_ * b.denom_);
}

DiffRational operator/(const DiffRational& a, const DiffRational& b) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  return DiffRational(a.numer_ * b.denom_, a.denom_ * b.numer_);
}

DiffRational DiffRational::pow(std::uint32_t e) const { return DiffRational(numer_.pow(e), denom_.pow(e)); }

DiffRational DiffRational::derivative() const {
  return DiffRational(differentiate(numer_) * denom_ - numer_ * differentiate(denom_), denom_ * denom_);
}

bool operator==(const DiffRational& a, const DiffRational& b) {
  return (a.numer_ * b.denom_ - b.numer_ * a.denom_).is_zero();
}

}  // namespace dalg

#include "dalg/ritt.hpp"

#include "dalg/error.hpp"

namespace dalg {

DiffPoly ReductionCertificate::defect(const DiffPoly& reduced) const {
  LeaderData ld = leader_data(reducer, indeterminate);
  DiffPoly lhs = ld.separant->pow(sep_exp) * ld.initial->pow(init_exp) * reduced;
  DiffPoly rhs = remainder;
  for (const auto& [j, c] : multipliers) rhs += c * differentiate(reducer, j);
  return lhs - rhs;
}

bool ReductionCertificate::verify(const DiffPoly& reduced) const {
  if (!defect(reduced).is_zero()) return false;
  if (remainder.is_zero()) return true;
  LeaderData ld = leader_data(reducer, indeterminate);
  auto r_order = remainder.order(indeterminate);
  if (r_order && *r_order > *ld.order) return false;
  return remainder.body().degree(*ld.leader) < ld.degree;
}

ReductionCertificate ritt_reduce(const DiffPoly& q, const DiffPoly& p, std::uint32_t indeterminate) {
  const LeaderData ld = leader_data(p, indeterminate);
  if (!ld.order) throw Error(ErrorCode::constant_reducer, "reducer has order -infinity");
  const std::uint32_t n = *ld.order;
  const SignaturePtr& sig = p.signature();

  ReductionCertificate cert{0, 0, {}, q, p, indeterminate};
  // Invariant: s^a * i^b * q = sum_j c_j D^j(p) + remainder.
  auto scale_multipliers = [&cert](const DiffPoly& factor) {
    for (auto& [j, c] : cert.multipliers) c *= factor;
  };

  std::vector<DiffPoly> derivatives{p};
  while (true) {
    auto ord = cert.remainder.order(indeterminate);
    if (!ord || *ord <= n) break;
    const std::uint32_t j = *ord - n;
    while (derivatives.size() <= j) derivatives.push_back(differentiate(derivatives.back()));
    const VarKey top = VarKey::of_jet(indeterminate, *ord);
    PseudoDivision div = pseudo_divide(cert.remainder.body(), derivatives[j].body(), top);
    if (div.exponent > 0) {
      DiffPoly factor = ld.separant->pow(div.exponent);
      scale_multipliers(factor);
      cert.sep_exp += div.exponent;
    }
    DiffPoly quotient(sig, div.quotient);
    auto [it, fresh] = cert.multipliers.try_emplace(j, quotient);
    if (!fresh) it->second += quotient;
    cert.remainder = DiffPoly(sig, div.remainder);
  }

  if (cert.remainder.body().degree(*ld.leader) >= ld.degree) {
    PseudoDivision div = pseudo_divide(cert.remainder.body(), p.body(), *ld.leader);
    if (div.exponent > 0) {
      scale_multipliers(ld.initial->pow(div.exponent));
      cert.init_exp += div.exponent;
    }
    DiffPoly quotient(sig, div.quotient);
    auto [it, fresh] = cert.multipliers.try_emplace(0, quotient);
    if (!fresh) it->second += quotient;
    cert.remainder = DiffPoly(sig, div.remainder);
  }

  for (auto it = cert.multipliers.begin(); it != cert.multipliers.end();) {
    if (it->second.is_zero())
      it = cert.multipliers.erase(it);
    else
      ++it;
  }
  return cert;
}

bool ideal_membership_IP(const DiffPoly& q, const DiffPoly& p, bool assume_irreducible, std::uint32_t indeterminate) {
  if (!assume_irreducible)
    throw Error(ErrorCode::irreducibility_unverified, "membership in I(P) requires P to be asserted irreducible");
  return ritt_reduce(q, p, indeterminate).remainder.is_zero();
}

}  // namespace dalg

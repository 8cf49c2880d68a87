#pragma once

#include <cstdint>
#include <map>

#include "dalg/diffpoly.hpp"

namespace dalg {

/// Record of a Ritt reduction of Q by P:
///   s_P^sep_exp * i_P^init_exp * Q = sum_j multipliers[j] * D^j(P) + remainder.
struct ReductionCertificate {
  std::uint32_t sep_exp = 0;
  std::uint32_t init_exp = 0;
  std::map<std::uint32_t, DiffPoly> multipliers;
  DiffPoly remainder;
  DiffPoly reducer;
  std::uint32_t indeterminate = 0;

  /// Left side minus right side of the identity, fully expanded.
  DiffPoly defect(const DiffPoly& reduced) const;
  /// The identity holds exactly and the remainder meets the order/degree bounds.
  bool verify(const DiffPoly& reduced) const;
};

/// Differential pseudo-division of q by p with respect to one indeterminate.
/// Eliminates the highest derivative occurrence first, pseudo-dividing by
/// D^j(p) (leading coefficient s_p), then pseudo-divides by p itself in its
/// leader. Throws Error(constant_reducer) when p has order -infinity.
ReductionCertificate ritt_reduce(const DiffPoly& q, const DiffPoly& p, std::uint32_t indeterminate = 0);

/// Membership of q in the prime differential ideal I(p). The caller must
/// assert irreducibility of p; otherwise throws Error(irreducibility_unverified).
bool ideal_membership_IP(const DiffPoly& q, const DiffPoly& p, bool assume_irreducible,
                         std::uint32_t indeterminate = 0);

}  // namespace dalg

#pragma once

// Dense exponent-vector polynomials with integer coefficients, used inside
// the Groebner engine. Terms are stored contiguously; each monomial occupies
// `stride` slots: [total degree, front-block degree, e_0, ..., e_{n-1}].

#include <cstdint>
#include <map>
#include <vector>

#include "dalg/mpoly.hpp"
#include "dalg/order.hpp"

namespace dalg::detail {

using Exp = std::uint16_t;

class DenseRing {
 public:
  /// Positions follow `order`: front block first for block orders, then
  /// descending variable priority.
  DenseRing(const std::vector<VarKey>& vars, const MonomialOrder& order);

  std::size_t nvars() const { return vars_.size(); }
  std::size_t stride() const { return vars_.size() + 2; }
  const std::vector<VarKey>& vars() const { return vars_; }
  std::size_t front_count() const { return front_count_; }
  std::optional<std::size_t> position(VarKey v) const;

  int compare(const Exp* a, const Exp* b) const;
  std::uint64_t mask(const Exp* a) const;
  bool divides(const Exp* a, const Exp* b) const;
  void mul(const Exp* a, const Exp* b, Exp* out) const;
  void div(const Exp* a, const Exp* b, Exp* out) const;
  void lcm(const Exp* a, const Exp* b, Exp* out) const;
  bool coprime(const Exp* a, const Exp* b) const;
  void fix_degrees(Exp* a) const;

 private:
  std::vector<VarKey> vars_;
  std::map<VarKey, std::size_t> index_;
  MonomialOrder::Kind kind_;
  std::size_t front_count_ = 0;
};

struct DPoly {
  std::vector<Exp> exps;
  std::vector<Int> coef;

  std::size_t size() const { return coef.size(); }
  bool empty() const { return coef.empty(); }
  const Exp* mono(std::size_t i, std::size_t stride) const { return exps.data() + i * stride; }
  void clear() {
    exps.clear();
    coef.clear();
  }
};

/// Clears denominators; the result is a primitive integer polynomial.
DPoly to_dense(const MPoly& f, const DenseRing& ring, Rat* scale = nullptr);
/// Monic rational polynomial under `order`.
MPoly from_dense(const DPoly& p, const DenseRing& ring, const OrderPtr& order, bool make_monic = true);

/// Divides by the gcd of the coefficients and makes the leading coefficient positive.
void make_primitive(DPoly& p);

}  // namespace dalg::detail

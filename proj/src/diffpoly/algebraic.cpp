#include "dalg/algebraic.hpp"

#include "dalg/error.hpp"

namespace dalg {

namespace {

void trim(AlgebraicPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

AlgebraicPoly sub(AlgebraicPoly a, const AlgebraicPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), DiffRational(DiffPoly(b.front().signature())));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
  trim(a);
  return a;
}

AlgebraicPoly mul(const AlgebraicPoly& a, const AlgebraicPoly& b, const SignaturePtr& sig) {
  if (a.empty() || b.empty()) return {};
  AlgebraicPoly out(a.size() + b.size() - 1, DiffRational(DiffPoly(sig)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  trim(out);
  return out;
}

// Long division over the fraction field of the coefficient ring.
std::pair<AlgebraicPoly, AlgebraicPoly> divmod(AlgebraicPoly a, const AlgebraicPoly& b, const SignaturePtr& sig) {
  AlgebraicPoly q;
  trim(a);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, DiffRational(DiffPoly(sig)));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    DiffRational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - c * b[i];
    a.pop_back();  // leading coefficient cancels exactly
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

AlgebraicPoly algebraic_derivative(const std::vector<DiffPoly>& min_poly) {
  if (min_poly.size() < 2 || min_poly.back().is_zero())
    throw Error(ErrorCode::invalid_argument, "minimal polynomial must have positive degree");
  const SignaturePtr& sig = min_poly.front().signature();
  AlgebraicPoly m, dm, m_delta;
  for (std::size_t i = 0; i < min_poly.size(); ++i) {
    m.emplace_back(min_poly[i]);
    m_delta.emplace_back(differentiate(min_poly[i]));
    if (i > 0) dm.push_back(DiffRational(min_poly[i] * Rat(static_cast<long>(i))));
  }
  trim(dm);
  trim(m_delta);
  if (dm.empty()) throw Error(ErrorCode::inseparable_or_not_squarefree, "formal derivative vanishes");

  // Extended Euclid: t1 * dm == r1 (mod m).
  AlgebraicPoly r0 = m, r1 = dm, t0, t1{DiffRational(DiffPoly::constant(sig, 1))};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, sig);
    AlgebraicPoly t2 = sub(t0, mul(q, t1, sig));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1)
    throw Error(ErrorCode::inseparable_or_not_squarefree, "derivative of the minimal polynomial is not invertible");
  const DiffRational g = r0.front();
  AlgebraicPoly inverse;
  for (const auto& c : t0) inverse.push_back(c / g);

  AlgebraicPoly product = mul(m_delta, inverse, sig);
  AlgebraicPoly result = divmod(product, m, sig).second;
  for (auto& c : result) c = -c;
  return result;
}

}  // namespace dalg

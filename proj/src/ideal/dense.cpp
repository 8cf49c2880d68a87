#include "dense.hpp"

#include <algorithm>
#include <numeric>

#include "dalg/error.hpp"

namespace dalg::detail {

DenseRing::DenseRing(const std::vector<VarKey>& vars, const MonomialOrder& order) : kind_(order.kind()) {
  std::vector<VarKey> front, rest;
  for (VarKey v : vars) {
    if (kind_ == MonomialOrder::Kind::block && order.in_front(v))
      front.push_back(v);
    else
      rest.push_back(v);
  }
  front = order.sorted_desc(std::move(front));
  rest = order.sorted_desc(std::move(rest));
  front_count_ = front.size();
  vars_ = std::move(front);
  vars_.insert(vars_.end(), rest.begin(), rest.end());
  for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = i;
}

std::optional<std::size_t> DenseRing::position(VarKey v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int DenseRing::compare(const Exp* a, const Exp* b) const {
  const std::size_t n = vars_.size();
  const Exp* ea = a + 2;
  const Exp* eb = b + 2;
  switch (kind_) {
    case MonomialOrder::Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (ea[i] != eb[i]) return ea[i] > eb[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Kind::grevlex:
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      for (std::size_t i = n; i-- > 0;)
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Kind::block: {
      if (a[1] != b[1]) return a[1] > b[1] ? 1 : -1;
      for (std::size_t i = front_count_; i-- > 0;)
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
      Exp ra = a[0] - a[1], rb = b[0] - b[1];
      if (ra != rb) return ra > rb ? 1 : -1;
      for (std::size_t i = n; i-- > front_count_;)
        if (ea[i] != eb[i]) return ea[i] < eb[i] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

std::uint64_t DenseRing::mask(const Exp* a) const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (a[i + 2] != 0) m |= std::uint64_t{1} << (i % 64);
  return m;
}

bool DenseRing::divides(const Exp* a, const Exp* b) const {
  if (a[0] > b[0]) return false;
  for (std::size_t i = 2; i < vars_.size() + 2; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

void DenseRing::mul(const Exp* a, const Exp* b, Exp* out) const {
  for (std::size_t i = 0; i < vars_.size() + 2; ++i) {
    std::uint32_t s = std::uint32_t{a[i]} + b[i];
    if (s > 0xFFFF) throw Error(ErrorCode::invalid_argument, "exponent overflow in Groebner engine");
    out[i] = static_cast<Exp>(s);
  }
}

void DenseRing::div(const Exp* a, const Exp* b, Exp* out) const {
  for (std::size_t i = 0; i < vars_.size() + 2; ++i) out[i] = a[i] - b[i];
}

void DenseRing::lcm(const Exp* a, const Exp* b, Exp* out) const {
  for (std::size_t i = 2; i < vars_.size() + 2; ++i) out[i] = std::max(a[i], b[i]);
  fix_degrees(out);
}

bool DenseRing::coprime(const Exp* a, const Exp* b) const {
  for (std::size_t i = 2; i < vars_.size() + 2; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

void DenseRing::fix_degrees(Exp* a) const {
  std::uint32_t total = 0, front = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    total += a[i + 2];
    if (i < front_count_) front += a[i + 2];
  }
  a[0] = static_cast<Exp>(total);
  a[1] = static_cast<Exp>(front);
}

void make_primitive(DPoly& p) {
  if (p.empty()) return;
  Int g = 0;
  for (const auto& c : p.coef) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.coef.front()) < 0) g = -g;
  if (g != 1)
    for (auto& c : p.coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

DPoly to_dense(const MPoly& f, const DenseRing& ring, Rat* scale) {
  const std::size_t stride = ring.stride();
  std::vector<Exp> exps(f.size() * stride, 0);
  std::vector<Rat> coefs;
  coefs.reserve(f.size());
  std::size_t t = 0;
  for (const auto& [m, c] : f.terms()) {
    Exp* e = exps.data() + t * stride;
    for (const auto& [v, k] : m.entries()) {
      auto pos = ring.position(v);
      if (!pos) throw Error(ErrorCode::invalid_argument, "polynomial variable " + default_var_name(v) + " outside ambient ring");
      if (k > 0xFFFF) throw Error(ErrorCode::invalid_argument, "exponent overflow in Groebner engine");
      e[*pos + 2] = static_cast<Exp>(k);
    }
    ring.fix_degrees(e);
    coefs.push_back(c);
    ++t;
  }
  std::vector<std::size_t> idx(f.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring.compare(exps.data() + a * stride, exps.data() + b * stride) > 0;
  });
  Int den = 1;
  for (const auto& c : coefs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  DPoly out;
  out.exps.reserve(exps.size());
  out.coef.reserve(f.size());
  for (std::size_t i : idx) {
    out.exps.insert(out.exps.end(), exps.begin() + i * stride, exps.begin() + (i + 1) * stride);
    Rat scaled = coefs[i] * den;
    out.coef.push_back(scaled.get_num());
  }
  Rat total = den;
  if (!out.empty()) {
    Int before = out.coef.front();
    make_primitive(out);
    Rat ratio(out.coef.front(), before);
    ratio.canonicalize();
    total *= ratio;
  }
  if (scale) *scale = total;
  return out;
}

MPoly from_dense(const DPoly& p, const DenseRing& ring, const OrderPtr& order, bool make_monic) {
  const std::size_t stride = ring.stride();
  std::vector<MPoly::Term> raw;
  raw.reserve(p.size());
  Rat lc = p.empty() || !make_monic ? Rat(1) : Rat(p.coef.front());
  for (std::size_t t = 0; t < p.size(); ++t) {
    const Exp* e = p.mono(t, stride);
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
      if (e[i + 2] != 0) entries.emplace_back(ring.vars()[i], e[i + 2]);
    raw.emplace_back(Monomial::from_entries(std::move(entries)), Rat(p.coef[t]) / lc);
  }
  return MPoly::normalize(std::move(raw), order);
}

}  // namespace dalg::detail

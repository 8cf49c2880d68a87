#include "dalg/diffpoly.hpp"

#include <algorithm>

#include "dalg/error.hpp"

namespace dalg {

namespace {

void check_same(const SignaturePtr& a, const SignaturePtr& b) {
  if (!same_signature(a, b)) throw Error(ErrorCode::signature_mismatch, "differential polynomials from different rings");
}

}  // namespace

DiffPoly::DiffPoly() : DiffPoly(default_signature()) {}

DiffPoly::DiffPoly(SignaturePtr sig) : sig_(std::move(sig)), body_(ranking_order()) {}

DiffPoly::DiffPoly(SignaturePtr sig, const MPoly& body) : sig_(std::move(sig)), body_(body.with_order(ranking_order())) {
  for (VarKey v : body_.variables()) {
    if (v.kind == VarKind::auxiliary || !sig_->contains(v))
      throw Error(ErrorCode::signature_mismatch, "variable " + default_var_name(v) + " is not in the ring signature");
  }
}

DiffPoly DiffPoly::constant(SignaturePtr sig, const Rat& c) {
  return DiffPoly(std::move(sig), MPoly::constant(c, ranking_order()));
}

DiffPoly DiffPoly::jet(SignaturePtr sig, std::uint32_t indeterminate, std::uint32_t k) {
  VarKey v = sig->jet(indeterminate, k);
  return DiffPoly(std::move(sig), MPoly::variable(v, ranking_order()));
}

DiffPoly DiffPoly::parameter(SignaturePtr sig, std::uint32_t index) {
  VarKey v = sig->parameter(index);
  return DiffPoly(std::move(sig), MPoly::variable(v, ranking_order()));
}

bool DiffPoly::is_free_of_jets() const {
  for (VarKey v : body_.variables())
    if (v.is_jet()) return false;
  return true;
}

std::optional<std::uint32_t> DiffPoly::order(std::uint32_t indeterminate) const {
  std::optional<std::uint32_t> best;
  for (const auto& [m, c] : body_.terms())
    for (const auto& [v, e] : m.entries())
      if (v.is_jet() && v.symbol == indeterminate) best = std::max(best.value_or(0), v.jet);
  return best;
}

std::optional<std::uint32_t> DiffPoly::max_order() const {
  std::optional<std::uint32_t> best;
  for (VarKey v : body_.variables())
    if (v.is_jet()) best = std::max(best.value_or(0), v.jet);
  return best;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly out = *this;
  out.body_ = -body_;
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
  check_same(sig_, other.sig_);
  body_ += other.body_;
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
  check_same(sig_, other.sig_);
  body_ -= other.body_;
  return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& other) {
  check_same(sig_, other.sig_);
  body_ *= other.body_;
  return *this;
}

DiffPoly operator*(DiffPoly a, const Rat& c) {
  a.body_ *= c;
  return a;
}

DiffPoly DiffPoly::pow(std::uint32_t e) const {
  DiffPoly out = *this;
  out.body_ = body_.pow(e);
  return out;
}

bool operator==(const DiffPoly& a, const DiffPoly& b) {
  return same_signature(a.sig_, b.sig_) && a.body_ == b.body_;
}

std::string DiffPoly::to_string() const {
  const Signature& sig = *sig_;
  return body_.to_string([&sig](VarKey v) { return sig.var_name(v); });
}

DiffPoly differentiate(const DiffPoly& p) {
  std::vector<MPoly::Term> raw;
  for (const auto& [m, c] : p.body().terms()) {
    for (const auto& [v, e] : m.entries()) {
      if (!v.is_jet()) continue;
      Monomial lowered = m.with_degree(v, e - 1);
      VarKey next = VarKey::of_jet(v.symbol, v.jet + 1);
      raw.emplace_back(lowered * Monomial(next), c * e);
    }
  }
  return DiffPoly(p.signature(), MPoly::normalize(std::move(raw), ranking_order()));
}

DiffPoly differentiate(const DiffPoly& p, std::uint32_t times) {
  DiffPoly out = p;
  for (std::uint32_t i = 0; i < times; ++i) out = differentiate(out);
  return out;
}

LeaderData leader_data(const DiffPoly& p, std::uint32_t indeterminate) {
  LeaderData out;
  out.order = p.order(indeterminate);
  if (!out.order) return out;
  VarKey leader = VarKey::of_jet(indeterminate, *out.order);
  out.leader = leader;
  out.degree = p.body().degree(leader);
  out.initial = DiffPoly(p.signature(), p.body().coefficient_of(leader, out.degree));
  out.separant = DiffPoly(p.signature(), p.body().partial(leader));
  return out;
}

std::vector<DiffPoly> prolong(const DiffPoly& p, std::uint32_t k) {
  std::vector<DiffPoly> out{p};
  out.reserve(k + 1);
  for (std::uint32_t i = 0; i < k; ++i) out.push_back(differentiate(out.back()));
  return out;
}

JetPoint JetPoint::of_jets(const std::vector<Rat>& jets, std::uint32_t indeterminate) {
  JetPoint out;
  for (std::size_t k = 0; k < jets.size(); ++k)
    out.values_[VarKey::of_jet(indeterminate, static_cast<std::uint32_t>(k))] = jets[k];
  return out;
}

JetPoint& JetPoint::set(VarKey v, const Rat& value) {
  values_[v] = value;
  return *this;
}

bool JetPoint::is_contiguous() const {
  std::map<std::uint32_t, std::vector<std::uint32_t>> jets;
  for (const auto& [v, x] : values_) {
    if (v.kind == VarKind::jet) jets[v.symbol].push_back(v.jet);
    if (v.kind == VarKind::parameter && v.jet != 0) return false;
  }
  for (auto& [sym, ks] : jets) {
    std::sort(ks.begin(), ks.end());
    for (std::size_t i = 0; i < ks.size(); ++i)
      if (ks[i] != i) return false;
  }
  return true;
}

Rat evaluate(const DiffPoly& p, const JetPoint& jet) {
  for (VarKey v : p.body().variables())
    if (!jet.values().count(v))
      throw Error(ErrorCode::unbound_variable, "no value for " + p.signature()->var_name(v));
  return evaluate(p.body(), jet.values());
}

}  // namespace dalg

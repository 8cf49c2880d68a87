#include "dalg/mpoly.hpp"

#include <algorithm>
#include <unordered_map>

#include "dalg/error.hpp"

namespace dalg {

std::string default_var_name(VarKey v) {
  switch (v.kind) {
    case VarKind::parameter: return "p" + std::to_string(v.symbol);
    case VarKind::auxiliary: return "t" + std::to_string(v.symbol);
    case VarKind::jet: break;
  }
  return "v" + std::to_string(v.symbol) + "_" + std::to_string(v.jet);
}

MPoly::MPoly() : order_(default_order()) {}

MPoly::MPoly(OrderPtr order) : order_(std::move(order)) {}

MPoly MPoly::normalize(std::vector<Term> raw, OrderPtr order) {
  MPoly out(std::move(order));
  const MonomialOrder& ord = *out.order_;
  std::sort(raw.begin(), raw.end(),
            [&ord](const Term& a, const Term& b) { return ord.compare(a.first, b.first) > 0; });
  for (auto& term : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == term.first) {
      out.terms_.back().second += term.second;
      if (sgn(out.terms_.back().second) == 0) out.terms_.pop_back();
    } else if (sgn(term.second) != 0) {
      out.terms_.push_back(std::move(term));
    }
  }
  return out;
}

MPoly mpoly_normalize(std::vector<MPoly::Term> raw, OrderPtr order) {
  return MPoly::normalize(std::move(raw), std::move(order));
}

MPoly MPoly::constant(const Rat& c, OrderPtr order) {
  MPoly out(std::move(order));
  if (sgn(c) != 0) out.terms_.emplace_back(Monomial(), c);
  return out;
}

MPoly MPoly::variable(VarKey v, OrderPtr order) {
  MPoly out(std::move(order));
  out.terms_.emplace_back(Monomial(v), Rat(1));
  return out;
}

MPoly MPoly::monomial(const Monomial& m, const Rat& c, OrderPtr order) {
  MPoly out(std::move(order));
  if (sgn(c) != 0) out.terms_.emplace_back(m, c);
  return out;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

const Monomial& MPoly::leading_monomial() const { return terms_.front().first; }

const Rat& MPoly::leading_coefficient() const { return terms_.front().second; }

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

Rat MPoly::coefficient(const Monomial& m) const {
  for (const auto& [mon, c] : terms_)
    if (mon == m) return c;
  return 0;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

std::uint32_t MPoly::degree(VarKey v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(v));
  return d;
}

std::vector<VarKey> MPoly::variables() const {
  std::vector<VarKey> vars;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.first.entries()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), std::greater<>());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool MPoly::involves(VarKey v) const {
  for (const auto& t : terms_)
    if (t.first.degree(v) > 0) return true;
  return false;
}

MPoly MPoly::coefficient_of(VarKey v, std::uint32_t d) const {
  std::vector<Term> raw;
  for (const auto& [m, c] : terms_)
    if (m.degree(v) == d) raw.emplace_back(m.without(v), c);
  return normalize(std::move(raw), order_);
}

MPoly MPoly::partial(VarKey v) const {
  std::vector<Term> raw;
  for (const auto& [m, c] : terms_) {
    auto e = m.degree(v);
    if (e == 0) continue;
    raw.emplace_back(m.with_degree(v, e - 1), c * e);
  }
  return normalize(std::move(raw), order_);
}

MPoly MPoly::with_order(OrderPtr order) const {
  if (same_order(order, order_)) {
    MPoly out = *this;
    out.order_ = std::move(order);
    return out;
  }
  return normalize(terms_, std::move(order));
}

MPoly MPoly::rename(const std::function<VarKey(VarKey)>& f) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [v, e] : m.entries()) entries.emplace_back(f(v), e);
    raw.emplace_back(Monomial::from_entries(std::move(entries)), c);
  }
  return normalize(std::move(raw), order_);
}

MPoly MPoly::substitute(const std::map<VarKey, MPoly>& values) const {
  MPoly out(order_);
  for (const auto& [m, c] : terms_) {
    MPoly term = MPoly::constant(c, order_);
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, e] : m.entries()) {
      auto it = values.find(v);
      if (it == values.end())
        kept.emplace_back(v, e);
      else
        term *= it->second.with_order(order_).pow(e);
    }
    out += term.mul_term(Monomial::from_entries(std::move(kept)), 1);
  }
  return out;
}

Rat MPoly::content() const {
  if (terms_.empty()) return 0;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat out(num_gcd, den_lcm);
  out.canonicalize();
  if (sgn(leading_coefficient()) < 0) out = -out;
  return out;
}

MPoly MPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  MPoly out = *this;
  for (auto& t : out.terms_) t.second /= c;
  return out;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  Rat lc = leading_coefficient();
  MPoly out = *this;
  for (auto& t : out.terms_) t.second /= lc;
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

const OrderPtr& common_order(const MPoly& a, const MPoly& b) {
  if (same_order(a.order(), b.order())) return a.order();
  if (a.is_zero()) return b.order();
  if (b.is_zero()) return a.order();
  throw Error(ErrorCode::order_mismatch, "polynomials carry different monomial orders");
}

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& x, const std::vector<MPoly::Term>& y,
                               const MonomialOrder& ord, bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(x.size() + y.size());
  auto a = x.begin(), b = y.begin();
  while (a != x.end() && b != y.end()) {
    auto c = ord.compare(a->first, b->first);
    if (c == 0) {
      Rat s = subtract ? Rat(a->second - b->second) : Rat(a->second + b->second);
      if (sgn(s) != 0) out.emplace_back(a->first, std::move(s));
      ++a, ++b;
    } else if (c > 0) {
      out.push_back(*a++);
    } else {
      out.emplace_back(b->first, subtract ? Rat(-b->second) : b->second);
      ++b;
    }
  }
  out.insert(out.end(), a, x.end());
  for (; b != y.end(); ++b) out.emplace_back(b->first, subtract ? Rat(-b->second) : b->second);
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& other) {
  OrderPtr ord = common_order(*this, other);
  if (!same_order(order_, ord)) *this = with_order(ord);
  if (!same_order(other.order_, ord)) return *this += other.with_order(ord);
  terms_ = merge(terms_, other.terms_, *order_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  OrderPtr ord = common_order(*this, other);
  if (!same_order(order_, ord)) *this = with_order(ord);
  if (!same_order(other.order_, ord)) return *this -= other.with_order(ord);
  terms_ = merge(terms_, other.terms_, *order_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  OrderPtr ord = common_order(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(ord);
  if (b.terms_.size() == 1) return a.with_order(ord).mul_term(b.terms_[0].first, b.terms_[0].second);
  if (a.terms_.size() == 1) return b.with_order(ord).mul_term(a.terms_[0].first, a.terms_[0].second);
  std::unordered_map<Monomial, Rat, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  std::vector<MPoly::Term> raw;
  raw.reserve(acc.size());
  for (auto& [m, c] : acc) raw.emplace_back(m, std::move(c));
  return MPoly::normalize(std::move(raw), ord);
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b) { return a * b; }

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly MPoly::mul_term(const Monomial& m, const Rat& c) const {
  MPoly out(order_);
  if (sgn(c) == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the term order.
  for (const auto& [mon, coef] : terms_) out.terms_.emplace_back(mon * m, coef * c);
  return out;
}

MPoly MPoly::pow(std::uint32_t e) const {
  MPoly result = MPoly::constant(1, order_);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::invalid_argument, "division by the zero polynomial");
  const MPoly d = divisor.with_order(order_);
  MPoly quotient(order_);
  MPoly rest = *this;
  const Monomial& lm = d.leading_monomial();
  const Rat& lc = d.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial& top = rest.leading_monomial();
    if (!lm.divides(top)) return std::nullopt;
    Monomial m = top / lm;
    Rat c = rest.leading_coefficient() / lc;
    quotient += MPoly::monomial(m, c, order_);
    rest -= d.mul_term(m, c);
  }
  return quotient;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (same_order(a.order_, b.order_)) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

namespace {

// Parameters, then jets grouped by indeterminate with increasing order, then
// auxiliaries.
bool print_before(VarKey a, VarKey b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.symbol != b.symbol) return a.symbol < b.symbol;
  return a.jet < b.jet;
}

}  // namespace

std::string MPoly::to_string(const VarNamer& namer) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::vector<Monomial::Entry> entries = m.entries();
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return print_before(x.first, y.first); });
    std::string body;
    for (const auto& [v, e] : entries) {
      if (!body.empty()) body += "*";
      body += namer(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty())
      out += dalg::to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += dalg::to_string(mag) + "*" + body;
  }
  return out;
}

PseudoDivision pseudo_divide(const MPoly& f, const MPoly& g, VarKey v) {
  const std::uint32_t dg = g.degree(v);
  if (dg == 0) throw Error(ErrorCode::degenerate_divisor, "divisor has degree 0 in the division variable");
  const OrderPtr& ord = f.is_zero() ? g.order() : f.order();
  const MPoly divisor = g.with_order(ord);
  const MPoly lead = divisor.coefficient_of(v, dg);
  // A leading coefficient of 1 needs no multiplication and is not counted.
  const bool unit_lead = lead == MPoly::constant(1, ord);
  PseudoDivision out{MPoly(ord), f, 0};
  while (!out.remainder.is_zero()) {
    const std::uint32_t dr = out.remainder.degree(v);
    if (dr < dg) break;
    MPoly top = out.remainder.coefficient_of(v, dr);
    Monomial shift(v, dr - dg);
    if (unit_lead) {
      out.remainder -= (top * divisor).mul_term(shift, 1);
      out.quotient += top.mul_term(shift, 1);
      continue;
    }
    out.remainder = lead * out.remainder - (top * divisor).mul_term(shift, 1);
    out.quotient = lead * out.quotient + top.mul_term(shift, 1);
    ++out.exponent;
  }
  return out;
}

Rat evaluate(const MPoly& p, const std::map<VarKey, Rat>& point) {
  Rat total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat value = c;
    for (const auto& [v, e] : m.entries()) {
      auto it = point.find(v);
      if (it == point.end()) throw Error(ErrorCode::unbound_variable, "no value for " + default_var_name(v));
      Rat x = it->second;
      Rat acc = 1;
      for (std::uint32_t i = 0; i < e; ++i) acc *= x;
      value *= acc;
    }
    total += value;
  }
  return total;
}

}  // namespace dalg

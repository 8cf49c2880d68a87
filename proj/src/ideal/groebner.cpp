#include "dalg/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <ranges>

#include "dalg/error.hpp"
#include "dense.hpp"

namespace dalg {

using detail::DenseRing;
using detail::DPoly;
using detail::Exp;

namespace {

// a * mp * p - b * mg * g, where the leading terms cancel by construction and
// are skipped. Null monomials mean 1.
DPoly lincomb(const DenseRing& ring, const DPoly& p, const Exp* mp, const Int& a, const DPoly& g, const Exp* mg,
              const Int& b) {
  const std::size_t stride = ring.stride();
  DPoly out;
  out.exps.reserve((p.size() + g.size()) * stride);
  out.coef.reserve(p.size() + g.size());
  std::vector<Exp> bp(stride), bg(stride);
  auto load = [&](const DPoly& q, const Exp* m, std::size_t i, std::vector<Exp>& buf) -> const Exp* {
    if (!m) return q.mono(i, stride);
    ring.mul(q.mono(i, stride), m, buf.data());
    return buf.data();
  };
  const bool a_one = a == 1;
  std::size_t i = 1, j = 1;
  Int tmp;
  while (i < p.size() && j < g.size()) {
    const Exp* ep = load(p, mp, i, bp);
    const Exp* eg = load(g, mg, j, bg);
    int c = ring.compare(ep, eg);
    if (c > 0) {
      out.exps.insert(out.exps.end(), ep, ep + stride);
      out.coef.push_back(a_one ? p.coef[i] : Int(a * p.coef[i]));
      ++i;
    } else if (c < 0) {
      out.exps.insert(out.exps.end(), eg, eg + stride);
      out.coef.push_back(-b * g.coef[j]);
      ++j;
    } else {
      tmp = a_one ? p.coef[i] : Int(a * p.coef[i]);
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g.coef[j].get_mpz_t());
      if (sgn(tmp) != 0) {
        out.exps.insert(out.exps.end(), ep, ep + stride);
        out.coef.push_back(tmp);
      }
      ++i, ++j;
    }
  }
  for (; i < p.size(); ++i) {
    const Exp* ep = load(p, mp, i, bp);
    out.exps.insert(out.exps.end(), ep, ep + stride);
    out.coef.push_back(a_one ? p.coef[i] : Int(a * p.coef[i]));
  }
  for (; j < g.size(); ++j) {
    const Exp* eg = load(g, mg, j, bg);
    out.exps.insert(out.exps.end(), eg, eg + stride);
    out.coef.push_back(-b * g.coef[j]);
  }
  return out;
}

struct Reducer {
  const DPoly* poly;
  std::uint64_t mask;
};

class Engine {
 public:
  explicit Engine(const DenseRing& ring) : ring_(ring), stride_(ring.stride()) {}

  // Full reduction of p by the reducers. `scale` accumulates the factor k with
  // result = k * (p - combination), for exact rational normal forms.
  DPoly reduce(DPoly p, const std::vector<Reducer>& reducers, Rat* scale = nullptr) const {
    DPoly result;
    std::vector<Exp> quotient(stride_);
    std::size_t steps = 0;
    std::size_t head = 0;  // terms before head have already been moved out
    while (head < p.size()) {
      const Exp* lm = p.mono(head, stride_);
      const std::uint64_t mask = ring_.mask(lm);
      const Reducer* best = nullptr;
      for (const auto& r : reducers) {
        if ((r.mask & ~mask) != 0) continue;
        if (!ring_.divides(r.poly->mono(0, stride_), lm)) continue;
        if (!best || r.poly->size() < best->poly->size()) best = &r;
      }
      if (!best) {
        result.exps.insert(result.exps.end(), lm, lm + stride_);
        result.coef.push_back(p.coef[head]);
        ++head;
        continue;
      }
      const DPoly& g = *best->poly;
      Int c;
      mpz_gcd(c.get_mpz_t(), p.coef[head].get_mpz_t(), g.coef[0].get_mpz_t());
      Int a = g.coef[0] / c;
      Int b = p.coef[head] / c;
      if (sgn(a) < 0) a = -a, b = -b;
      ring_.div(lm, g.mono(0, stride_), quotient.data());
      if (head > 0) drop_head(p, head);
      head = 0;
      p = lincomb(ring_, p, nullptr, a, g, quotient.data(), b);
      if (a != 1) {
        for (auto& x : result.coef) x *= a;
        if (scale) *scale *= a;
      }
      if (++steps % 8 == 0) strip_content(p, result, scale);
    }
    strip_content(p, result, scale);
    if (!result.empty() && sgn(result.coef.front()) < 0) {
      for (auto& x : result.coef) x = -x;
      if (scale) *scale = -*scale;
    }
    return result;
  }

  DPoly spoly(const DPoly& f, const DPoly& g) const {
    std::vector<Exp> l(stride_), mf(stride_), mg(stride_);
    ring_.lcm(f.mono(0, stride_), g.mono(0, stride_), l.data());
    ring_.div(l.data(), f.mono(0, stride_), mf.data());
    ring_.div(l.data(), g.mono(0, stride_), mg.data());
    Int c;
    mpz_gcd(c.get_mpz_t(), f.coef[0].get_mpz_t(), g.coef[0].get_mpz_t());
    Int a = g.coef[0] / c, b = f.coef[0] / c;
    return lincomb(ring_, f, mf.data(), a, g, mg.data(), b);
  }

 private:
  void drop_head(DPoly& p, std::size_t head) const {
    p.exps.erase(p.exps.begin(), p.exps.begin() + head * stride_);
    p.coef.erase(p.coef.begin(), p.coef.begin() + head);
  }

  static void strip_content(DPoly& p, DPoly& result, Rat* scale) {
    Int g = 0;
    for (const auto* q : {&result, &p}) {
      for (const auto& c : q->coef) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0 || g == 1) return;
    for (auto* q : {&result, &p})
      for (auto& c : q->coef) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (scale) *scale /= g;
  }

  const DenseRing& ring_;
  std::size_t stride_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  std::vector<Exp> lcm;
};

class Buchberger {
 public:
  Buchberger(const DenseRing& ring, GroebnerStats* stats)
      : ring_(ring), stride_(ring.stride()), engine_(ring), stats_(stats) {}

  // Returns false when the ideal is the unit ideal.
  bool run(std::vector<DPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(), [this](const DPoly& a, const DPoly& b) {
      if (a.empty() || b.empty()) return !a.empty() < !b.empty();
      int c = ring_.compare(a.mono(0, stride_), b.mono(0, stride_));
      if (c != 0) return c < 0;
      return a.size() < b.size();
    });
    for (auto& f : inputs) {
      if (f.empty()) continue;
      if (!add(engine_.reduce(std::move(f), reducers()))) return false;
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        if (a.lcm[0] != b.lcm[0]) return a.lcm[0] < b.lcm[0];
        int c = ring_.compare(a.lcm.data(), b.lcm.data());
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair pair = std::move(*it);
      *it = std::move(pairs_.back());
      pairs_.pop_back();
      if (stats_) ++stats_->pairs_reduced;
      DPoly h = engine_.reduce(engine_.spoly(polys_[pair.i], polys_[pair.j]), reducers());
      if (h.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (!add(std::move(h))) return false;
    }
    return true;
  }

  // Minimal, interreduced basis, primitive integer polynomials.
  std::vector<DPoly> reduced_basis() const {
    std::vector<std::size_t> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t l = 0; l < polys_.size() && !redundant; ++l) {
        if (l == k || !active_[l]) continue;
        const Exp* lk = polys_[k].mono(0, stride_);
        const Exp* ll = polys_[l].mono(0, stride_);
        if (ring_.divides(ll, lk) && (ring_.compare(ll, lk) != 0 || l < k)) redundant = true;
      }
      if (!redundant) minimal.push_back(k);
    }
    std::vector<DPoly> out;
    for (std::size_t k : minimal) {
      std::vector<Reducer> others;
      for (std::size_t l : minimal)
        if (l != k) others.push_back({&polys_[l], ring_.mask(polys_[l].mono(0, stride_))});
      out.push_back(engine_.reduce(polys_[k], others));
    }
    std::sort(out.begin(), out.end(), [this](const DPoly& a, const DPoly& b) {
      return ring_.compare(a.mono(0, stride_), b.mono(0, stride_)) > 0;
    });
    return out;
  }

 private:
  std::vector<Reducer> reducers() const {
    std::vector<Reducer> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back({&polys_[k], masks_[k]});
    return out;
  }

  bool is_constant(const DPoly& h) const { return h.mono(0, stride_)[0] == 0; }

  std::vector<Exp> lcm_of(std::size_t a, std::size_t b) const {
    std::vector<Exp> l(stride_);
    ring_.lcm(polys_[a].mono(0, stride_), polys_[b].mono(0, stride_), l.data());
    return l;
  }

  bool divides_vec(const std::vector<Exp>& a, const std::vector<Exp>& b) const {
    return ring_.divides(a.data(), b.data());
  }

  // Gebauer-Moeller installation of a new basis element.
  bool add(DPoly h) {
    if (h.empty()) return true;
    detail::make_primitive(h);
    if (is_constant(h)) return false;
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    masks_.push_back(ring_.mask(polys_[hi].mono(0, stride_)));
    active_.push_back(true);
    const Exp* lh = polys_[hi].mono(0, stride_);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, lcm_of(g, hi)});
    if (stats_) stats_->pairs_considered += candidates.size();

    std::vector<bool> keep(candidates.size(), true);
    std::vector<Pair> d;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool coprime = ring_.coprime(polys_[p.i].mono(0, stride_), lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t o = c + 1; o < candidates.size() && !dominated; ++o)
          if (keep[o] && divides_vec(candidates[o].lcm, p.lcm)) dominated = true;
        for (const auto& q : d)
          if (!dominated && divides_vec(q.lcm, p.lcm)) dominated = true;
      }
      if (dominated)
        keep[c] = false;
      else
        d.push_back(p);
    }
    std::vector<Pair> e;
    for (auto& p : d)
      if (!ring_.coprime(polys_[p.i].mono(0, stride_), lh)) e.push_back(std::move(p));

    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      bool drop = ring_.divides(lh, p.lcm.data());
      if (drop) {
        auto l1 = lcm_of(p.i, hi), l2 = lcm_of(p.j, hi);
        if (l1 == p.lcm || l2 == p.lcm) drop = false;
      }
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& p : e) pairs_.push_back(std::move(p));

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && ring_.divides(lh, polys_[g].mono(0, stride_))) active_[g] = false;
    if (stats_) {
      std::size_t live = std::count(active_.begin(), active_.end(), true);
      stats_->basis_peak = std::max(stats_->basis_peak, live);
    }
    return true;
  }

  const DenseRing& ring_;
  std::size_t stride_;
  Engine engine_;
  GroebnerStats* stats_;
  std::vector<DPoly> polys_;
  std::vector<std::uint64_t> masks_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::vector<VarKey> collect_vars(const std::vector<VarKey>& declared, const std::vector<MPoly>& polys) {
  std::vector<VarKey> vars = declared;
  for (const auto& p : polys) {
    auto pv = p.variables();
    vars.insert(vars.end(), pv.begin(), pv.end());
  }
  std::sort(vars.begin(), vars.end(), std::greater<>());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

std::vector<VarKey> IdealHandle::ambient() const { return collect_vars(variables, generators); }

GroebnerBasis::GroebnerBasis(std::vector<MPoly> generators, OrderPtr order, std::vector<VarKey> variables,
                             bool reduced)
    : generators_(std::move(generators)), order_(std::move(order)), variables_(std::move(variables)),
      reduced_(reduced) {}

bool GroebnerBasis::is_unit() const {
  return generators_.size() == 1 && generators_[0].is_constant() && !generators_[0].is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const IdealHandle& ideal, const OrderPtr& order, GroebnerStats* stats) {
  std::vector<VarKey> vars = ideal.ambient();
  DenseRing ring(vars, *order);
  std::vector<DPoly> inputs;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) inputs.push_back(detail::to_dense(g, ring));
  Buchberger bb(ring, stats);
  if (!bb.run(std::move(inputs)))
    return GroebnerBasis({MPoly::constant(1, order)}, order, std::move(vars), true);
  std::vector<MPoly> gens;
  for (const auto& p : bb.reduced_basis()) gens.push_back(detail::from_dense(p, ring, order));
  return GroebnerBasis(std::move(gens), order, std::move(vars), true);
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return f.with_order(gb.order());
  std::vector<VarKey> vars = collect_vars(gb.variables(), {f});
  vars = collect_vars(vars, gb.generators());
  DenseRing ring(vars, *gb.order());
  std::vector<DPoly> basis;
  for (const auto& g : gb.generators()) basis.push_back(detail::to_dense(g, ring));
  std::vector<Reducer> reducers;
  for (const auto& b : basis) reducers.push_back({&b, ring.mask(b.mono(0, ring.stride()))});
  Rat scale;
  DPoly dense = detail::to_dense(f, ring, &scale);
  Engine engine(ring);
  DPoly r = engine.reduce(std::move(dense), reducers, &scale);
  MPoly out = detail::from_dense(r, ring, gb.order(), false);
  return out * Rat(1 / scale);
}

bool ideal_member(const MPoly& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), 1 / f.leading_coefficient()) -
         g.mul_term(l / g.leading_monomial(), 1 / g.leading_coefficient());
}

GroebnerBasis eliminate(const IdealHandle& ideal, const std::vector<VarKey>& keep, GroebnerStats* stats) {
  std::vector<VarKey> vars = ideal.ambient();
  std::vector<VarKey> front;
  for (VarKey v : vars)
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) front.push_back(v);
  OrderPtr order = make_order(MonomialOrder::block(front));
  GroebnerBasis full = buchberger({ideal.generators, vars}, order, stats);
  std::vector<MPoly> kept;
  for (const auto& g : full.generators()) {
    bool free = true;
    for (VarKey v : g.leading_monomial().entries() | std::views::keys)
      if (order->in_front(v)) free = false;
    if (free) kept.push_back(g);
  }
  std::vector<VarKey> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end(), std::greater<>());
  return GroebnerBasis(std::move(kept), order, std::move(keep_sorted), true);
}

VarKey fresh_auxiliary(const IdealHandle& ideal) {
  std::uint32_t next = 0;
  for (VarKey v : ideal.ambient())
    if (v.kind == VarKind::auxiliary) next = std::max(next, v.symbol + 1);
  return VarKey::of_auxiliary(next);
}

IdealHandle rabinowitsch(const IdealHandle& ideal, const MPoly& s, VarKey t) {
  if (s.is_zero()) throw Error(ErrorCode::zero_saturation, "cannot saturate by the zero polynomial");
  IdealHandle out{ideal.generators, collect_vars(ideal.variables, {s})};
  out.variables.push_back(t);
  const OrderPtr& order = ideal.generators.empty() ? s.order() : ideal.generators.front().order();
  MPoly tv = MPoly::variable(t, order);
  out.generators.push_back(tv * s.with_order(order) - MPoly::constant(1, order));
  return out;
}

IdealHandle saturate(const IdealHandle& ideal, const MPoly& s) {
  if (s.is_zero()) throw Error(ErrorCode::zero_saturation, "cannot saturate by the zero polynomial");
  VarKey t = fresh_auxiliary({ideal.generators, collect_vars(ideal.variables, {s})});
  IdealHandle extended = rabinowitsch(ideal, s, t);
  std::vector<VarKey> keep = collect_vars(ideal.variables, ideal.generators);
  keep = collect_vars(keep, {s});
  GroebnerBasis gb = eliminate(extended, keep);
  std::vector<MPoly> gens;
  for (const auto& g : gb.generators()) gens.push_back(g.with_order(default_order()));
  return IdealHandle{std::move(gens), keep};
}

namespace {

void search_independent(const std::vector<std::uint64_t>& lms, std::size_t n, std::size_t i, std::uint64_t chosen,
                        std::size_t count, std::size_t& best, std::uint64_t& best_set) {
  if (count + (n - i) <= best) return;
  if (i == n) {
    best = count;
    best_set = chosen;
    return;
  }
  std::uint64_t with = chosen | (std::uint64_t{1} << i);
  bool ok = true;
  for (auto m : lms)
    if ((m & ~with) == 0) {
      ok = false;
      break;
    }
  if (ok) search_independent(lms, n, i + 1, with, count + 1, best, best_set);
  search_independent(lms, n, i + 1, chosen, count, best, best_set);
}

}  // namespace

std::vector<VarKey> maximal_independent_set(const GroebnerBasis& gb) {
  if (gb.is_unit()) throw Error(ErrorCode::empty_variety, "the unit ideal has an empty variety");
  std::vector<VarKey> vars = collect_vars(gb.variables(), gb.generators());
  if (vars.size() > 64) throw Error(ErrorCode::invalid_argument, "dimension search supports at most 64 variables");
  std::vector<std::uint64_t> lms;
  for (const auto& g : gb.generators()) {
    std::uint64_t m = 0;
    for (VarKey v : g.leading_monomial().entries() | std::views::keys) {
      auto pos = std::find(vars.begin(), vars.end(), v) - vars.begin();
      m |= std::uint64_t{1} << pos;
    }
    lms.push_back(m);
  }
  std::size_t best = 0;
  std::uint64_t best_set = 0;
  search_independent(lms, vars.size(), 0, 0, 0, best, best_set);
  std::vector<VarKey> out;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (best_set & (std::uint64_t{1} << i)) out.push_back(vars[i]);
  return out;
}

std::size_t dimension(const GroebnerBasis& gb) { return maximal_independent_set(gb).size(); }

bool has_leading_monomial_in(const GroebnerBasis& gb, const std::vector<VarKey>& vars) {
  for (const auto& g : gb.generators()) {
    bool inside = true;
    for (VarKey v : g.leading_monomial().entries() | std::views::keys)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) inside = false;
    if (inside) return true;
  }
  return false;
}

}  // namespace dalg

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's arithmetic beyond reading terms out of inputs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dalg/diffpoly.hpp"

namespace oracle {

using dalg::Int;
using dalg::Rat;

// Polynomial in the jets u0..u_{N-1} of a single indeterminate, stored as a
// map from exponent vectors (index = jet order) to coefficients.
struct JetPoly {
  std::map<std::vector<unsigned>, Rat> terms;

  static std::vector<unsigned> pad(std::vector<unsigned> e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
  }
  static JetPoly constant(const Rat& c) {
    JetPoly p;
    if (c != 0) p.terms[{}] = c;
    return p;
  }
  static JetPoly jet(unsigned k, unsigned e = 1) {
    std::vector<unsigned> v(k + 1, 0);
    v[k] = e;
    JetPoly p;
    p.terms[pad(v)] = 1;
    return p;
  }
  void add_term(std::vector<unsigned> e, const Rat& c) {
    e = pad(std::move(e));
    Rat& slot = terms[e];
    slot += c;
    if (slot == 0) terms.erase(e);
  }
  friend JetPoly operator+(const JetPoly& a, const JetPoly& b) {
    JetPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
  }
  friend JetPoly operator-(const JetPoly& a, const JetPoly& b) {
    JetPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, -c);
    return out;
  }
  friend JetPoly operator*(const JetPoly& a, const JetPoly& b) {
    JetPoly out;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) {
        std::vector<unsigned> e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  JetPoly pow(unsigned n) const {
    JetPoly out = constant(1);
    for (unsigned i = 0; i < n; ++i) out = out * *this;
    return out;
  }
  // D(u_k^e) = e u_k^(e-1) u_{k+1}, extended by the product rule.
  JetPoly derivative() const {
    JetPoly out;
    for (const auto& [e, c] : terms)
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        std::vector<unsigned> f = e;
        f.resize(std::max(f.size(), k + 2), 0);
        f[k] -= 1;
        f[k + 1] += 1;
        out.add_term(f, c * e[k]);
      }
    return out;
  }
  bool operator==(const JetPoly&) const = default;
};

// Reads a DiffPoly in one indeterminate (no parameters) into a JetPoly.
inline JetPoly from_diffpoly(const dalg::DiffPoly& p) {
  JetPoly out;
  for (const auto& [m, c] : p.body().terms()) {
    std::vector<unsigned> e;
    for (const auto& [v, d] : m.entries()) {
      if (e.size() <= v.jet) e.resize(v.jet + 1, 0);
      e[v.jet] += d;
    }
    out.add_term(e, c);
  }
  return out;
}

// Exact rank of a rational matrix.
inline std::size_t rank(std::vector<std::vector<Rat>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t q = r + 1; q < rows.size(); ++q) {
      if (rows[q][c] == 0) continue;
      Rat f = rows[q][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Macaulay-matrix membership: f lies in (gens) if it is in the Q-span of
// {m * g : deg(m * g) <= bound}. Exponent vectors index `nvars` variables.
using Exps = std::vector<unsigned>;
using SparsePoly = std::map<Exps, Rat>;

inline void monomials_up_to(unsigned nvars, unsigned deg, std::vector<Exps>& out, Exps cur = {}) {
  if (cur.size() == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= deg; ++e) {
    cur.push_back(e);
    monomials_up_to(nvars, deg - e, out, cur);
    cur.pop_back();
  }
}

inline unsigned total_degree(const SparsePoly& p) {
  unsigned d = 0;
  for (const auto& [e, c] : p) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

inline bool macaulay_member(const SparsePoly& f, const std::vector<SparsePoly>& gens, unsigned nvars, unsigned bound) {
  if (f.empty()) return true;
  std::vector<Exps> cols_list;
  monomials_up_to(nvars, bound, cols_list);
  std::map<Exps, std::size_t> col;
  for (const auto& e : cols_list) col.emplace(e, col.size());
  auto to_row = [&](const SparsePoly& p, const Exps& shift) {
    std::vector<Rat> row(col.size(), Rat(0));
    for (const auto& [e, c] : p) {
      Exps s = e;
      for (unsigned i = 0; i < nvars; ++i) s[i] += shift[i];
      row[col.at(s)] = c;
    }
    return row;
  };
  std::vector<std::vector<Rat>> rows;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    unsigned dg = total_degree(g);
    if (dg > bound) continue;
    std::vector<Exps> shifts;
    monomials_up_to(nvars, bound - dg, shifts);
    for (const auto& s : shifts) rows.push_back(to_row(g, s));
  }
  if (total_degree(f) > bound) return false;
  std::size_t base = rank(rows);
  rows.push_back(to_row(f, Exps(nvars, 0)));
  return rank(rows) == base;
}

// Truncated power series sum a_i x^i with exact coefficients.
using Series = std::vector<Rat>;

inline Series series_mul(const Series& a, const Series& b) {
  Series out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Series series_derivative(const Series& a) {
  Series out(a.size(), Rat(0));
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
  return out;
}

// Evaluates a jet polynomial along the series u (jets are its derivatives).
inline Series eval_series(const JetPoly& p, const Series& u) {
  std::vector<Series> jets{u};
  Series out(u.size(), Rat(0));
  for (const auto& [e, c] : p.terms) {
    while (jets.size() < e.size()) jets.push_back(series_derivative(jets.back()));
    Series term(u.size(), Rat(0));
    term[0] = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (unsigned i = 0; i < e[k]; ++i) term = series_mul(term, jets[k]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
  }
  return out;
}

// Taylor solution of P(u, ..., u^(n)) = 0 with P of degree one in u^(n),
// from initial data a_0..a_{n-1}. Coefficient of x^m in P(u) is affine in
// a_{m+n}, solved order by order. `terms` coefficients are kept; later entries
// are only reliable up to len - n, so callers truncate accordingly.
inline Series taylor_solution(const JetPoly& p, unsigned n, const std::vector<Rat>& initial, std::size_t len) {
  Series u(len, Rat(0));
  for (unsigned i = 0; i < n; ++i) u[i] = initial[i];
  for (std::size_t m = 0; m + n < len; ++m) {
    u[m + n] = 0;
    Rat c0 = eval_series(p, u)[m];
    u[m + n] = 1;
    Rat c1 = eval_series(p, u)[m];
    if (c1 == c0) throw std::runtime_error("degenerate initial data for the series oracle");
    u[m + n] = -c0 / (c1 - c0);
  }
  return u;
}

}  // namespace oracle

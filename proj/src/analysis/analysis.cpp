#include "dalg/analysis.hpp"

#include <algorithm>
#include <map>
#include <ranges>

#include "dalg/error.hpp"
#include "dalg/ritt.hpp"

namespace dalg {

namespace {

// Basis of the right kernel of a rational matrix (rows x cols).
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || sgn(rows[q][c]) == 0) continue;
      Rat f = rows[q][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scales to coprime integers with the first nonzero entry positive.
std::vector<Rat> normalize_relation(std::vector<Rat> v) {
  Int num = 0, den = 1;
  for (const auto& x : v) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  Rat scale(den, num);
  scale.canonicalize();
  for (const auto& x : v)
    if (sgn(x) != 0) {
      if (sgn(x) < 0) scale = -scale;
      break;
    }
  for (auto& x : v) x *= scale;
  return v;
}

DiffPoly determinant_rec(const DiffMatrix& m, std::size_t row, std::uint64_t used, std::map<std::uint64_t, DiffPoly>& memo) {
  const std::size_t n = m.size();
  if (row == n) return DiffPoly::constant(m[0][0].signature(), 1);
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  DiffPoly total(m[0][0].signature());
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used & (std::uint64_t{1} << c)) continue;
    if (!m[row][c].is_zero()) {
      DiffPoly minor = determinant_rec(m, row + 1, used | (std::uint64_t{1} << c), memo);
      DiffPoly term = m[row][c] * minor;
      if (sign > 0)
        total += term;
      else
        total -= term;
    }
    sign = -sign;
  }
  memo.emplace(used, total);
  return total;
}

// Univariate helpers on dense rational coefficient vectors (index = degree).
using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly umod(UPoly a, const UPoly& b) {
  utrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    utrim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly udiv(UPoly a, const UPoly& b) {
  utrim(a);
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rat c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    utrim(a);
  }
  return q;
}

// Squarefree part of a polynomial in the single variable v.
MPoly squarefree_univariate(const MPoly& p, VarKey v) {
  UPoly coeffs(p.degree(v) + 1, Rat(0));
  for (const auto& [m, c] : p.terms()) coeffs[m.degree(v)] = c;
  UPoly deriv;
  for (std::size_t i = 1; i < coeffs.size(); ++i) deriv.push_back(coeffs[i] * static_cast<long>(i));
  UPoly g = ugcd(coeffs, deriv);
  UPoly sq = g.size() <= 1 ? coeffs : udiv(coeffs, g);
  std::vector<MPoly::Term> raw;
  for (std::size_t i = 0; i < sq.size(); ++i)
    if (sgn(sq[i]) != 0) raw.emplace_back(Monomial(v, static_cast<std::uint32_t>(i)), sq[i]);
  return MPoly::normalize(std::move(raw), p.order()).primitive();
}

MPoly product(const std::vector<MPoly>& factors, const OrderPtr& order) {
  MPoly out = MPoly::constant(1, order);
  for (const auto& f : factors) out *= f.with_order(order);
  return out;
}

// Moves a polynomial in the single indeterminate 0 to copy `index`.
MPoly to_copy(const MPoly& p, std::uint32_t index) {
  return p.rename([index](VarKey v) { return v.is_jet() ? VarKey::of_jet(index, v.jet) : v; }).with_order(default_order());
}

std::vector<VarKey> parameters_of(const std::vector<MPoly>& polys) {
  std::vector<VarKey> out;
  for (const auto& p : polys)
    for (VarKey v : p.variables())
      if (v.kind == VarKind::parameter && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

// Elements of a basis lying in Q[keep]. When keep is a final segment of the
// basis' lex order this is the reduced basis of the elimination ideal.
GroebnerBasis restrict_to(const GroebnerBasis& gb, const std::vector<VarKey>& keep) {
  std::vector<MPoly> kept;
  for (const auto& g : gb.generators()) {
    auto vars = g.variables();
    if (std::all_of(vars.begin(), vars.end(), [&](VarKey v) { return std::find(keep.begin(), keep.end(), v) != keep.end(); }))
      kept.push_back(g);
  }
  return GroebnerBasis(std::move(kept), gb.order(), keep, gb.reduced());
}

}  // namespace

DiffMatrix wronskian_matrix(const std::vector<DiffPoly>& fs) {
  if (fs.empty()) throw Error(ErrorCode::invalid_argument, "Wronskian of an empty tuple");
  DiffMatrix w{fs};
  for (std::size_t i = 1; i < fs.size(); ++i) {
    std::vector<DiffPoly> row;
    for (const auto& f : w.back()) row.push_back(differentiate(f));
    w.push_back(std::move(row));
  }
  return w;
}

DiffPoly determinant(const DiffMatrix& m) {
  if (m.empty() || m.size() > 20) throw Error(ErrorCode::invalid_argument, "determinant needs 1..20 rows");
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorCode::invalid_argument, "determinant of a non-square matrix");
  std::map<std::uint64_t, DiffPoly> memo;
  return determinant_rec(m, 0, 0, memo);
}

std::string to_string(LinearVerdict v) {
  switch (v) {
    case LinearVerdict::independent: return "INDEPENDENT";
    case LinearVerdict::dependent: return "DEPENDENT";
    case LinearVerdict::undecided: return "UNDECIDED";
  }
  return "";
}

WronskianReport constants_linear_independence(const std::vector<DiffPoly>& fs, const std::optional<DiffPoly>& modulo) {
  WronskianReport report;
  report.matrix = wronskian_matrix(fs);
  report.determinant = determinant(report.matrix);
  report.reduced_determinant = modulo ? ritt_reduce(report.determinant, *modulo).remainder : report.determinant;
  if (!report.reduced_determinant.is_zero()) {
    report.verdict = LinearVerdict::independent;
    return report;
  }

  // Symbolic combination sum c_j f_j with fresh parameters; its (reduced)
  // remainder is linear in the c_j.
  const SignaturePtr& sig = fs.front().signature();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    std::string name = "_c" + std::to_string(j);
    while (sig->find_parameter(name) || sig->find_indeterminate(name)) name = "_" + name;
    names.push_back(name);
  }
  SignaturePtr ext = sig->with_parameters(names);
  std::vector<VarKey> unknowns;
  DiffPoly combo(ext);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    VarKey c = VarKey::of_parameter(*ext->find_parameter(names[j]));
    unknowns.push_back(c);
    combo += DiffPoly(ext, fs[j].body()) * DiffPoly(ext, MPoly::variable(c, ranking_order()));
  }
  DiffPoly residue = modulo ? ritt_reduce(combo, DiffPoly(ext, modulo->body())).remainder : combo;

  std::map<std::vector<Monomial::Entry>, std::vector<Rat>> equations;
  for (const auto& [m, coef] : residue.body().terms()) {
    std::vector<Monomial::Entry> rest;
    std::optional<std::size_t> which;
    for (const auto& entry : m.entries()) {
      auto it = std::find(unknowns.begin(), unknowns.end(), entry.first);
      if (it != unknowns.end())
        which = static_cast<std::size_t>(it - unknowns.begin());
      else
        rest.push_back(entry);
    }
    auto& row = equations.try_emplace(rest, std::vector<Rat>(fs.size(), Rat(0))).first->second;
    if (which) row[*which] += coef;
  }
  std::vector<std::vector<Rat>> rows;
  for (auto& [key, row] : equations) rows.push_back(row);
  auto kernel = nullspace(rows, fs.size());
  if (kernel.empty()) {
    report.verdict = LinearVerdict::undecided;
    return report;
  }
  report.verdict = LinearVerdict::dependent;
  report.relation = normalize_relation(kernel.front());
  return report;
}

std::vector<MPoly> saturation_factors(const std::vector<MPoly>& polys) {
  std::vector<MPoly> out;
  auto add = [&out](MPoly f) {
    f = f.with_order(default_order()).primitive();
    if (f.is_constant()) return;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  };
  for (const auto& p : polys) {
    if (p.is_zero()) throw Error(ErrorCode::zero_saturation, "cannot saturate by the zero polynomial");
    std::optional<Monomial> common;
    for (const auto& [m, c] : p.terms()) {
      if (!common) {
        common = m;
        continue;
      }
      std::vector<Monomial::Entry> kept;
      for (const auto& [v, e] : common->entries())
        if (m.degree(v) > 0) kept.emplace_back(v, std::min(e, m.degree(v)));
      common = Monomial::from_entries(std::move(kept));
    }
    for (VarKey v : common->entries() | std::views::keys) add(MPoly::variable(v, default_order()));
    MPoly rest = *p.divide_exact(MPoly::monomial(*common, 1, p.order()));
    auto vars = rest.variables();
    if (vars.size() == 1)
      add(squarefree_univariate(rest, vars.front()));
    else
      add(rest);
  }
  return out;
}

TrdegReport generic_trdeg_check(const DiffRational& eq, std::uint32_t k) {
  eq.require_equation();
  const LeaderData ld = leader_data(eq.numer());
  TrdegReport report;
  report.order = *ld.order;
  report.k = k;
  if (report.order < 1) throw Error(ErrorCode::invalid_argument, "generic_trdeg_check needs an equation of order >= 1");

  IdealHandle ideal;
  for (const auto& p : prolong(eq.numer(), k)) ideal.generators.push_back(p.body().with_order(default_order()));
  for (std::uint32_t j = 0; j <= report.order + k; ++j) ideal.variables.push_back(VarKey::of_jet(0, j));
  std::vector<VarKey> params = parameters_of(ideal.generators);
  for (const auto& v : parameters_of({eq.denom().body(), ld.separant->body()}))
    if (std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);
  ideal.variables.insert(ideal.variables.end(), params.begin(), params.end());

  auto factors = saturation_factors({ld.separant->body(), eq.denom().body()});
  VarKey t = fresh_auxiliary(ideal);
  IdealHandle j_ideal = rabinowitsch(ideal, product(factors, default_order()), t);
  GroebnerBasis gb = buchberger(j_ideal, ranking_order());
  if (gb.is_unit()) throw Error(ErrorCode::equation_inconsistent, "saturated prolongation ideal is the unit ideal");

  report.dimension = dimension(gb);
  report.expected_dimension = report.order + params.size();
  std::vector<VarKey> keep;
  for (std::uint32_t j = 0; j < report.order; ++j) keep.push_back(VarKey::of_jet(0, j));
  keep.insert(keep.end(), params.begin(), params.end());
  // Low jets and parameters form a final segment of the natural lex order.
  report.low_order_relations = restrict_to(gb, keep);
  report.pass = report.dimension == report.expected_dimension && report.low_order_relations.is_zero_ideal();
  return report;
}

std::string to_string(WitnessOutcome o) {
  switch (o) {
    case WitnessOutcome::refutes: return "REFUTES";
    case WitnessOutcome::inconsistent_at: return "INCONSISTENT_AT";
    case WitnessOutcome::forces_algebraic: return "FORCES_ALGEBRAIC";
  }
  return "";
}

std::string WitnessVerdict::label() const {
  if (outcome == WitnessOutcome::inconsistent_at) return "INCONSISTENT_AT(" + std::to_string(k) + ")";
  return to_string(outcome);
}

SignaturePtr witness_signature(const DiffRational& eq, std::uint32_t m, std::vector<std::string> names) {
  if (names.empty()) {
    static const char* defaults[] = {"x", "y", "z", "w"};
    for (std::uint32_t i = 0; i < m; ++i)
      names.push_back(m <= 4 ? std::string(defaults[i]) : "x" + std::to_string(i + 1));
  }
  if (names.size() != m) throw Error(ErrorCode::invalid_argument, "need one name per copy");
  return make_signature(std::move(names), eq.signature()->parameters());
}

WitnessVerdict dm_witness_check(const DiffRational& eq, std::uint32_t m, const DiffPoly& relation, std::uint32_t k) {
  eq.require_equation();
  if (m < 1) throw Error(ErrorCode::invalid_argument, "need at least one copy");
  if (relation.is_zero()) throw Error(ErrorCode::trivial_witness, "the candidate relation is zero");
  if (eq.signature()->indeterminate_count() != 1)
    throw Error(ErrorCode::invalid_argument, "witness checks need an equation in a single indeterminate");
  const SignaturePtr& copies = relation.signature();
  if (copies->indeterminate_count() != m || copies->parameters() != eq.signature()->parameters())
    throw Error(ErrorCode::invalid_argument, "relation must live in the ring of the m copies");
  const LeaderData ld = leader_data(eq.numer());
  const std::uint32_t n = *ld.order;
  if (auto ord = relation.max_order(); ord && *ord >= n)
    throw Error(ErrorCode::invalid_argument, "relation may only involve jets of order below the equation order");

  std::vector<MPoly> gens;
  std::vector<MPoly> saturating;
  std::vector<VarKey> ambient;
  const auto prolonged = prolong(eq.numer(), k);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (const auto& p : prolonged) gens.push_back(to_copy(p.body(), i));
    for (std::uint32_t j = 0; j <= n + k; ++j) ambient.push_back(VarKey::of_jet(i, j));
    saturating.push_back(to_copy(ld.separant->body(), i));
    saturating.push_back(to_copy(eq.denom().body(), i));
  }
  for (const auto& p : prolong(relation, k)) gens.push_back(p.body().with_order(default_order()));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j)
      saturating.push_back(MPoly::variable(VarKey::of_jet(i, 0)) - MPoly::variable(VarKey::of_jet(j, 0)));
  std::vector<VarKey> params = parameters_of(gens);
  for (const auto& v : parameters_of(saturating))
    if (std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);

  // Solve the triangular leaders: D^j P (j >= 1), and P itself when linear in
  // its leader, is s * leader + (lower terms) with s the separant, a unit after
  // saturation. Pseudo-reducing the other generators by it and dropping it
  // leaves the saturated ideal unchanged on the remaining variables.
  const std::uint32_t lowest = ld.degree == 1 ? 0 : 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    const MPoly sep = to_copy(ld.separant->body(), i);
    for (std::uint32_t j = k + 1; j-- > lowest;) {
      const VarKey v = VarKey::of_jet(i, n + j);
      const MPoly solved = to_copy(prolonged[j].body(), i);
      if (solved.degree(v) != 1 || !(solved.coefficient_of(v, 1) == sep)) continue;
      std::vector<MPoly> rest;
      for (auto& g : gens) {
        if (g == solved) continue;
        rest.push_back(g.involves(v) ? pseudo_divide(g, solved, v).remainder.primitive() : g);
      }
      gens = std::move(rest);
      ambient.erase(std::find(ambient.begin(), ambient.end(), v));
    }
  }
  std::erase_if(gens, [](const MPoly& g) { return g.is_zero(); });

  IdealHandle ideal{gens, ambient};
  ideal.variables.insert(ideal.variables.end(), params.begin(), params.end());
  auto factors = saturation_factors(saturating);
  VarKey t = fresh_auxiliary(ideal);
  IdealHandle j_ideal = rabinowitsch(ideal, product(factors, default_order()), t);
  // t in its own leading block: the t-free part of the basis is the saturation.
  GroebnerBasis gb = buchberger(j_ideal, make_order(MonomialOrder::block({t})));

  WitnessVerdict verdict;
  verdict.k = k;
  verdict.copies = copies;
  if (gb.is_unit()) {
    verdict.outcome = WitnessOutcome::inconsistent_at;
    verdict.evidence = GroebnerBasis({MPoly::constant(1)}, default_order(), ideal.ambient(), true);
    return verdict;
  }
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<VarKey> keep{VarKey::of_jet(i, 0)};
    keep.insert(keep.end(), params.begin(), params.end());
    if (!has_leading_monomial_in(gb, keep)) continue;
    GroebnerBasis elim = eliminate(j_ideal, keep);
    if (elim.is_zero_ideal()) continue;
    verdict.outcome = WitnessOutcome::forces_algebraic;
    verdict.forced_copy = i;
    verdict.relation = elim.generators().front();
    verdict.evidence = elim;
    return verdict;
  }
  verdict.outcome = WitnessOutcome::refutes;
  verdict.evidence = restrict_to(gb, ideal.ambient());
  return verdict;
}

DiffRational CompanionSystem::holonomic() const {
  const std::size_t n = coefficients.size();
  const SignaturePtr& sig = coefficients.front().signature();
  DiffRational out(DiffPoly::jet(sig, 0, static_cast<std::uint32_t>(n)));
  for (std::size_t i = 0; i < n; ++i)
    out = out + coefficients[i] * DiffRational(DiffPoly::jet(sig, 0, static_cast<std::uint32_t>(i)));
  return out;
}

CompanionSystem companion_system(const std::vector<DiffRational>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::invalid_argument, "companion system needs n >= 1");
  for (const auto& b : coeffs)
    if (!b.numer().is_free_of_jets() || !b.denom().is_free_of_jets())
      throw Error(ErrorCode::invalid_argument, "companion coefficients must lie in the base field");
  const std::size_t n = coeffs.size();
  const SignaturePtr& sig = coeffs.front().signature();
  const DiffRational zero{DiffPoly(sig)}, one{DiffPoly::constant(sig, 1)};
  CompanionSystem out;
  out.coefficients = coeffs;
  out.matrix.assign(n, std::vector<DiffRational>(n, zero));
  for (std::size_t i = 0; i + 1 < n; ++i) out.matrix[i][i + 1] = one;
  for (std::size_t j = 0; j < n; ++j) out.matrix[n - 1][j] = -coeffs[j];
  return out;
}

}  // namespace dalg

#include <doctest.h>

#include "dalg/analysis.hpp"
#include "dalg/catalog.hpp"
#include "dalg/error.hpp"
#include "dalg/ritt.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace dalg;

namespace {

DiffPoly u(std::uint32_t k) { return DiffPoly::jet(default_signature(), 0, k); }
DiffPoly c(const Rat& v) { return DiffPoly::constant(default_signature(), v); }
DiffRational dr(const DiffPoly& p) { return DiffRational(p); }

DiffPoly combination(const std::vector<Rat>& coeffs, const std::vector<DiffPoly>& fs) {
  DiffPoly sum(fs.front().signature());
  for (std::size_t j = 0; j < fs.size(); ++j) sum += coeffs[j] * fs[j];
  return sum;
}

// Base jet j of copy i in the witness ring.
DiffPoly wjet(const SignaturePtr& sig, std::uint32_t i, std::uint32_t j) { return DiffPoly::jet(sig, i, j); }

}  // namespace

TEST_CASE("wronskian_matrix examples") {
  auto m = wronskian_matrix({c(1), u(0)});
  CHECK(m[0][0] == c(1));
  CHECK(m[0][1] == u(0));
  CHECK(m[1][0].is_zero());
  CHECK(m[1][1] == u(1));
  m = wronskian_matrix({u(0), c(2) * u(0)});
  CHECK(m[1][1] == c(2) * u(1));
  m = wronskian_matrix({u(0), u(1)});
  CHECK(m[1][1] == u(2));
}

TEST_CASE("wronskian rows follow the derivative recurrence") {
  testing_support::Gen g(51);
  for (int i = 0; i < 50; ++i) {
    std::vector<DiffPoly> fs;
    for (int j = 0; j < 3; ++j) fs.push_back(g.diffpoly(default_signature(), 2, 2, 3));
    auto m = wronskian_matrix(fs);
    for (std::size_t r = 0; r + 1 < m.size(); ++r)
      for (std::size_t j = 0; j < fs.size(); ++j) CHECK(m[r + 1][j] == differentiate(m[r][j]));
  }
}

TEST_CASE("determinant agrees with cofactor expansion on small matrices") {
  DiffMatrix m{{u(0), u(1)}, {u(1), u(2)}};
  CHECK(determinant(m) == u(0) * u(2) - u(1) * u(1));
  DiffMatrix id{{c(1), c(0), c(0)}, {c(0), c(1), c(0)}, {c(0), c(0), c(1)}};
  CHECK(determinant(id) == c(1));
}

TEST_CASE("constants_linear_independence examples") {
  auto r = constants_linear_independence({u(0), c(2) * u(0)});
  CHECK(r.verdict == LinearVerdict::dependent);
  REQUIRE(r.relation.size() == 2);
  CHECK(r.relation[0] == 2);
  CHECK(r.relation[1] == -1);

  r = constants_linear_independence({c(1), u(0)}, u(1) - c(1));
  CHECK(r.verdict == LinearVerdict::independent);
  CHECK(r.reduced_determinant == c(1));

  r = constants_linear_independence({u(0), u(1)}, u(2) + u(0));
  CHECK(r.verdict == LinearVerdict::independent);
  CHECK(r.reduced_determinant == -(u(0) * u(0)) - u(1) * u(1));
}

TEST_CASE("dependent verdicts carry annihilating relations") {
  testing_support::Gen g(52);
  for (int i = 0; i < 40; ++i) {
    DiffPoly a = g.diffpoly(default_signature(), 2, 2, 3), b = g.diffpoly(default_signature(), 2, 2, 3);
    if (a.is_zero() || b.is_zero()) continue;
    Rat p = g.range(-3, 3), q = g.range(-3, 3);
    std::vector<DiffPoly> fs{a, b, p * a + q * b};
    auto r = constants_linear_independence(fs);
    REQUIRE(r.verdict == LinearVerdict::dependent);
    CHECK(combination(r.relation, fs).is_zero());
  }
}

TEST_CASE("independent verdicts modulo a constraint have a nonzero reduced determinant") {
  for (const auto& fs : std::vector<std::vector<DiffPoly>>{{c(1), u(0)}, {u(0), u(1)}, {c(1), u(0), u(1)}}) {
    auto r = constants_linear_independence(fs, harmonic_oscillator().numer());
    CHECK(r.verdict == LinearVerdict::independent);
    CHECK_FALSE(r.reduced_determinant.is_zero());
  }
}

TEST_CASE("trdeg examples") {
  auto r = generic_trdeg_check(poizat_equation(), 2);
  CHECK(r.dimension == 2);
  CHECK(r.low_order_relations.is_zero_ideal());
  CHECK(r.pass);
  r = generic_trdeg_check(constant_equation(), 2);
  CHECK(r.dimension == 1);
  CHECK(r.pass);
  r = generic_trdeg_check(harmonic_oscillator(), 2);
  CHECK(r.dimension == 2);
  CHECK(r.pass);
}

TEST_CASE("trdeg holds across the catalog") {
  for (const auto& e : catalog()) {
    // chi's saturated prolongation grows too quickly past level 1.
    const std::uint32_t top = e.name == "chi" ? 1 : 3;
    for (std::uint32_t k = 0; k <= top; ++k) {
      CAPTURE(e.name);
      CAPTURE(k);
      auto r = generic_trdeg_check(e.equation, k);
      CHECK(r.dimension == e.order);
      CHECK(r.low_order_relations.is_zero_ideal());
      CHECK(r.pass);
    }
  }
}

TEST_CASE("inconsistent equations are reported") {
  // u'^2 = 0 forces u' = 0, where the separant 2u' vanishes.
  DiffRational eq(u(1) * u(1), c(1));
  CHECK_THROWS_AS(generic_trdeg_check(eq, 1), Error);
}

TEST_CASE("witness examples") {
  auto sig = witness_signature(constant_equation(), 2);
  auto v = dm_witness_check(constant_equation(), 2, wjet(sig, 0, 0) - wjet(sig, 1, 0) - DiffPoly::constant(sig, 1), 2);
  CHECK(v.outcome == WitnessOutcome::refutes);
  CHECK(v.label() == "REFUTES");

  auto hsig = witness_signature(harmonic_oscillator(), 1);
  DiffPoly first_integral = wjet(hsig, 0, 0).pow(2) + wjet(hsig, 0, 1).pow(2) - DiffPoly::constant(hsig, 1);
  v = dm_witness_check(harmonic_oscillator(), 1, first_integral, 2);
  CHECK(v.outcome == WitnessOutcome::refutes);

  auto psig = witness_signature(poizat_equation(), 2);
  DiffPoly x = wjet(psig, 0, 0), y = wjet(psig, 1, 0);
  v = dm_witness_check(poizat_equation(), 2, x - y - DiffPoly::constant(psig, 1), 3);
  CHECK(v.outcome == WitnessOutcome::inconsistent_at);
  CHECK(v.label() == "INCONSISTENT_AT(3)");
  CHECK(v.evidence.is_unit());
}

TEST_CASE("witness errors") {
  auto sig = witness_signature(constant_equation(), 2);
  CHECK_THROWS_AS(dm_witness_check(constant_equation(), 2, DiffPoly(sig), 1), Error);
  try {
    dm_witness_check(constant_equation(), 2, DiffPoly(sig), 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::trivial_witness);
  }
  // Order-1 jets are not base jets of a first-order equation.
  CHECK_THROWS_AS(dm_witness_check(constant_equation(), 2, wjet(sig, 0, 1), 1), Error);
}

TEST_CASE("inconsistency is monotone in k") {
  auto psig = witness_signature(poizat_equation(), 2);
  DiffPoly x = wjet(psig, 0, 0), y = wjet(psig, 1, 0);
  for (const DiffPoly& rel : {x - y - DiffPoly::constant(psig, 1), x - DiffPoly::constant(psig, 2) * y}) {
    for (std::uint32_t k = 1; k <= 2; ++k) {
      auto a = dm_witness_check(poizat_equation(), 2, rel, k);
      if (a.outcome != WitnessOutcome::inconsistent_at) continue;
      auto b = dm_witness_check(poizat_equation(), 2, rel, k + 1);
      CHECK(b.outcome == WitnessOutcome::inconsistent_at);
    }
  }
}

TEST_CASE("refutations are re-validated independently") {
  struct Case {
    DiffRational eq;
    std::uint32_t m;
    std::function<DiffPoly(const SignaturePtr&)> rel;
  };
  std::vector<Case> cases{
      {constant_equation(), 2, [](const SignaturePtr& s) { return wjet(s, 0, 0) - wjet(s, 1, 0) - DiffPoly::constant(s, 1); }},
      {harmonic_oscillator(), 1,
       [](const SignaturePtr& s) { return wjet(s, 0, 0).pow(2) + wjet(s, 0, 1).pow(2) - DiffPoly::constant(s, 1); }},
      {constant_equation(), 2, [](const SignaturePtr& s) { return wjet(s, 0, 0) * wjet(s, 1, 0) - DiffPoly::constant(s, 1); }},
  };
  for (const auto& cs : cases) {
    auto sig = witness_signature(cs.eq, cs.m);
    DiffPoly rel = cs.rel(sig);
    for (std::uint32_t k = 0; k <= 2; ++k) {
      auto v = dm_witness_check(cs.eq, cs.m, rel, k);
      REQUIRE(v.outcome == WitnessOutcome::refutes);
      CHECK_FALSE(v.evidence.is_unit());
      CHECK(normal_form(rel.body().with_order(v.evidence.order()), v.evidence).is_zero());
    }
  }
}

TEST_CASE("forced algebraic coordinates are detected") {
  // For constants, x^2 - 2 = 0 pins the solution to an algebraic number.
  auto sig = witness_signature(constant_equation(), 1);
  auto v = dm_witness_check(constant_equation(), 1, wjet(sig, 0, 0).pow(2) - DiffPoly::constant(sig, 2), 1);
  CHECK(v.outcome == WitnessOutcome::forces_algebraic);
  REQUIRE(v.relation.has_value());
  CHECK(v.forced_copy == 0u);
}

TEST_CASE("companion system") {
  auto sig = default_signature()->with_parameters({"a", "b"});
  DiffRational b0(DiffPoly::parameter(sig, 0)), b1(DiffPoly::parameter(sig, 1));
  auto cs = companion_system({b0, b1});
  REQUIRE(cs.matrix.size() == 2);
  CHECK(cs.matrix[0][0].is_zero());
  CHECK(cs.matrix[0][1] == DiffRational(DiffPoly::constant(sig, 1)));
  CHECK(cs.matrix[1][0] == -b0);
  CHECK(cs.matrix[1][1] == -b1);
  DiffPoly x0 = DiffPoly::jet(sig, 0, 0), x1 = DiffPoly::jet(sig, 0, 1), x2 = DiffPoly::jet(sig, 0, 2);
  CHECK(cs.holonomic().numer() == x2 + DiffPoly::parameter(sig, 1) * x1 + DiffPoly::parameter(sig, 0) * x0);

  auto one = companion_system({dr(c(3))});
  REQUIRE(one.matrix.size() == 1);
  CHECK(one.matrix[0][0] == dr(c(-3)));
  CHECK_THROWS_AS(companion_system({dr(u(0))}), Error);
  CHECK_THROWS_AS(companion_system({}), Error);
}

TEST_CASE("saturation factors are squarefree and distinct") {
  const VarKey a = VarKey::of_jet(0, 0), b = VarKey::of_jet(0, 1);
  MPoly x = MPoly::variable(a), y = MPoly::variable(b);
  auto fs = saturation_factors({x.pow(3) * y, (x - MPoly::constant(1)).pow(2), x * (x + y)});
  CHECK(std::count(fs.begin(), fs.end(), x) == 1);
  CHECK(std::count(fs.begin(), fs.end(), y) == 1);
  const MPoly shifted = x - MPoly::constant(1);
  CHECK(std::count(fs.begin(), fs.end(), shifted) + std::count(fs.begin(), fs.end(), -shifted) == 1);
}

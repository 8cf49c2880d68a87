#include "dalg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <optional>

#include "dalg/analysis.hpp"
#include "dalg/catalog.hpp"
#include "dalg/error.hpp"
#include "dalg/expr.hpp"
#include "dalg/ritt.hpp"
#include "dalg/version.hpp"

namespace dalg {

namespace {

using Json = nlohmann::ordered_json;

struct Certificate {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::uint32_t> k;
  Json verdict;
  std::vector<std::string> basis;
  std::optional<std::string> remainder;
  int exit_code = 0;
};

struct Options {
  std::string format = "json";
  std::string vars = "u";
  bool timing = false;
};

std::string render_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit(const Certificate& c, const Options& opt, long long ms, std::ostream& out) {
  Json j;
  j["command"] = c.command;
  j["version"] = version;
  j["inputs"] = c.inputs;
  j["bounds"] = Json{{"k", c.k ? Json(*c.k) : Json(nullptr)}};
  j["verdict"] = c.verdict;
  j["basis"] = c.basis;
  j["remainder"] = c.remainder ? Json(*c.remainder) : Json(nullptr);
  j["timing_ms"] = opt.timing ? ms : 0;
  if (opt.format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_array()) {
      out << key << ":\n";
      for (const auto& v : value) out << "  " << render_text(v) << "\n";
    } else {
      out << key << ": " << render_text(value) << "\n";
    }
  }
}

DiffPoly require_polynomial(const DiffRational& r, const char* what) {
  if (!r.denom().body().is_constant())
    throw Error(ErrorCode::invalid_argument, std::string(what) + " must be a differential polynomial");
  return r.numer() * (1 / r.denom().body().constant_term());
}

Json leader_json(const DiffPoly& p) {
  LeaderData ld = leader_data(p);
  if (!ld.order)
    return Json{{"order", nullptr}, {"degree", 0}, {"leader", nullptr}, {"initial", nullptr}, {"separant", nullptr}};
  return Json{{"order", *ld.order},
              {"degree", ld.degree},
              {"leader", p.signature()->var_name(*ld.leader)},
              {"initial", ld.initial->to_string()},
              {"separant", ld.separant->to_string()}};
}

std::string print_in(const SignaturePtr& sig, const MPoly& body) {
  return DiffPoly(sig, body.with_order(ranking_order())).to_string();
}

DiffRational equation_from(const std::string& expr, const std::string& catalog_name, const Options& opt) {
  if (!catalog_name.empty()) {
    if (!expr.empty()) throw Error(ErrorCode::invalid_argument, "give either an equation or --catalog, not both");
    return catalog_entry(catalog_name).equation;
  }
  if (expr.empty()) throw Error(ErrorCode::invalid_argument, "an equation or --catalog NAME is required");
  return parse_expr(expr, split_names(opt.vars));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact differential algebra toolkit", "dalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--vars", opt.vars, "Comma-separated differential indeterminates");
  app.add_flag("--timing", opt.timing, "Report wall time in timing_ms");
  app.set_version_flag("--version", version);

  std::string expr, wrt, order_name = "grevlex", relation, modular, catalog_name, copies;
  std::vector<std::string> exprs;
  std::uint32_t k = 1, m = 2, times = 1;
  bool assume_irreducible = false;

  auto* info = app.add_subcommand("info", "Order, leader, initial and separant");
  info->add_option("expr", expr)->required();
  auto* derive = app.add_subcommand("derive", "Apply the derivation");
  derive->add_option("expr", expr)->required();
  derive->add_option("-n,--times", times, "Number of derivatives");
  auto* reduce = app.add_subcommand("reduce", "Ritt reduction with certificate");
  reduce->add_option("expr", expr)->required();
  reduce->add_option("--wrt", wrt, "Reducer P")->required();
  auto* member = app.add_subcommand("member", "Membership in I(P)");
  member->add_option("expr", expr)->required();
  member->add_option("--wrt", wrt, "Minimal polynomial P")->required();
  member->add_flag("--assume-irreducible", assume_irreducible, "Assert that P is irreducible");
  auto* prolong_cmd = app.add_subcommand("prolong", "P, D(P), ..., D^k(P)");
  prolong_cmd->add_option("expr", expr)->required();
  prolong_cmd->add_option("-k", k, "Prolongation bound");
  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis");
  groebner->add_option("exprs", exprs)->required();
  groebner->add_option("--order", order_name)->check(CLI::IsMember({"grevlex", "lex"}));
  auto* wronskian = app.add_subcommand("wronskian", "Linear independence over the constants");
  wronskian->add_option("exprs", exprs)->required();
  wronskian->add_option("--wrt", wrt, "Constraint P (asserted irreducible)");
  auto* trdeg = app.add_subcommand("trdeg-check", "Generic transcendence degree evidence");
  trdeg->footer("PASS is necessary-condition evidence at level k, not a proof of Property D_m.");
  trdeg->add_option("expr", expr);
  trdeg->add_option("--catalog", catalog_name, "Catalog equation instead of expr");
  trdeg->add_option("-k", k, "Prolongation bound");
  auto* witness = app.add_subcommand("witness-check", "Bounded refutation of Property D_m by a candidate relation");
  witness->footer(
      "REFUTES means the relation is consistent among distinct non-algebraic solutions up to level k.\n"
      "INCONSISTENT_AT(k) only rules out this candidate; no outcome of this command proves Property D_m.");
  witness->add_option("expr", expr);
  witness->add_option("--catalog", catalog_name, "Catalog equation instead of expr");
  witness->add_option("-m", m, "Number of solutions");
  witness->add_option("-k", k, "Prolongation bound");
  witness->add_option("--relation", relation, "Relation in the copies (default names x, y, z, w)");
  witness->add_option("--modular", modular, "Use F(x, y) from a modular data file as the relation");
  witness->add_option("--copies", copies, "Comma-separated names of the copies");
  auto* companion = app.add_subcommand("companion", "Companion matrix of u^(n) + sum b_i u^(i)");
  companion->add_option("coefficients", exprs, "b_0 ... b_{n-1}")->required();
  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in equations");
  catalog_cmd->add_option("name", catalog_name);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Certificate c;
  c.command = app.get_subcommands().front()->get_name();
  try {
    const auto vars = split_names(opt.vars);
    if (*info) {
      DiffRational r = parse_expr(expr, vars);
      c.inputs = {print_expr(r)};
      c.verdict = leader_json(r.numer());
    } else if (*derive) {
      DiffRational r = parse_expr(expr, vars);
      c.inputs = {print_expr(r)};
      DiffRational d = r;
      for (std::uint32_t i = 0; i < times; ++i) d = d.derivative();
      c.verdict = print_expr(d);
    } else if (*reduce || *member) {
      auto parsed = parse_exprs({expr, wrt}, vars);
      DiffPoly q = require_polynomial(parsed[0], "the reduced expression");
      DiffPoly p = require_polynomial(parsed[1], "the reducer");
      c.inputs = {q.to_string(), p.to_string()};
      if (*reduce) {
        ReductionCertificate cert = ritt_reduce(q, p);
        Json mult = Json::array();
        for (const auto& [j, coef] : cert.multipliers) mult.push_back(Json{{"j", j}, {"multiplier", coef.to_string()}});
        c.verdict = Json{{"sep_exp", cert.sep_exp}, {"init_exp", cert.init_exp}, {"multipliers", mult}};
        c.remainder = cert.remainder.to_string();
      } else {
        bool in = ideal_membership_IP(q, p, assume_irreducible);
        c.verdict = in;
        c.remainder = ritt_reduce(q, p).remainder.to_string();
        c.exit_code = in ? 0 : 1;
      }
    } else if (*prolong_cmd) {
      DiffRational r = parse_expr(expr, vars);
      c.inputs = {print_expr(r)};
      c.k = k;
      for (const auto& p : prolong(r.numer(), k)) c.basis.push_back(p.to_string());
      c.verdict = "OK";
    } else if (*groebner) {
      auto parsed = parse_exprs(exprs, vars);
      IdealHandle ideal;
      for (const auto& r : parsed) {
        DiffPoly p = require_polynomial(r, "each generator");
        c.inputs.push_back(p.to_string());
        ideal.generators.push_back(p.body().with_order(default_order()));
      }
      OrderPtr ord = order_name == "lex" ? ranking_order() : default_order();
      GroebnerBasis gb = buchberger(ideal, ord);
      const SignaturePtr& sig = parsed.front().signature();
      for (const auto& g : gb.generators()) c.basis.push_back(print_in(sig, g));
      c.verdict = Json{{"order", order_name}, {"unit", gb.is_unit()},
                       {"dimension", gb.is_unit() ? Json(nullptr) : Json(dimension(gb))}};
    } else if (*wronskian) {
      std::vector<std::string> texts = exprs;
      if (!wrt.empty()) texts.push_back(wrt);
      auto parsed = parse_exprs(texts, vars);
      std::vector<DiffPoly> fs;
      for (std::size_t i = 0; i < exprs.size(); ++i) {
        fs.push_back(require_polynomial(parsed[i], "each entry"));
        c.inputs.push_back(fs.back().to_string());
      }
      std::optional<DiffPoly> modulo;
      if (!wrt.empty()) {
        modulo = require_polynomial(parsed.back(), "the constraint");
        c.inputs.push_back(modulo->to_string());
      }
      WronskianReport rep = constants_linear_independence(fs, modulo);
      Json relation = Json::array();
      for (const auto& x : rep.relation) relation.push_back(to_string(x));
      c.verdict = Json{{"decision", to_string(rep.verdict)}, {"determinant", rep.determinant.to_string()},
                       {"relation", relation}};
      c.remainder = rep.reduced_determinant.to_string();
    } else if (*trdeg) {
      DiffRational eq = equation_from(expr, catalog_name, opt);
      c.inputs = {print_expr(eq)};
      c.k = k;
      TrdegReport rep = generic_trdeg_check(eq, k);
      for (const auto& g : rep.low_order_relations.generators()) c.basis.push_back(print_in(eq.signature(), g));
      c.verdict = Json{{"decision", rep.pass ? "PASS" : "FAIL"},
                       {"order", rep.order},
                       {"dimension", rep.dimension},
                       {"expected_dimension", rep.expected_dimension}};
      c.exit_code = rep.pass ? 0 : 1;
    } else if (*witness) {
      DiffRational eq = equation_from(expr, catalog_name, opt);
      if (relation.empty() == modular.empty())
        throw Error(ErrorCode::invalid_argument, "give exactly one of --relation and --modular");
      SignaturePtr sig = witness_signature(eq, m, split_names(copies));
      DiffPoly rel;
      if (!modular.empty()) {
        if (m != 2) throw Error(ErrorCode::invalid_argument, "--modular needs -m 2");
        rel = DiffPoly(sig, load_modular_data(modular).poly.with_order(ranking_order()));
      } else {
        rel = require_polynomial(parse_expr_in(relation, sig), "the relation");
      }
      c.inputs = {print_expr(eq), rel.to_string()};
      c.k = k;
      WitnessVerdict v = dm_witness_check(eq, m, rel, k);
      for (const auto& g : v.evidence.generators()) c.basis.push_back(print_in(v.copies, g));
      c.verdict = v.label();
      if (v.relation) c.remainder = print_in(v.copies, *v.relation);
      c.exit_code = v.outcome == WitnessOutcome::refutes ? 0 : 1;
    } else if (*companion) {
      auto parsed = parse_exprs(exprs, vars);
      for (const auto& r : parsed) c.inputs.push_back(print_expr(r));
      CompanionSystem sys = companion_system(parsed);
      Json matrix = Json::array();
      for (const auto& row : sys.matrix) {
        Json jr = Json::array();
        for (const auto& e : row) jr.push_back(print_expr(e));
        matrix.push_back(jr);
      }
      c.verdict = Json{{"matrix", matrix}, {"holonomic", print_expr(sys.holonomic())}};
    } else if (*catalog_cmd) {
      auto describe = [](const CatalogEntry& e) {
        return Json{{"equation", print_expr(e.equation)}, {"order", e.order}, {"note", e.note}};
      };
      if (catalog_name.empty()) {
        c.verdict = Json::object();
        for (const auto& e : catalog()) c.verdict[e.name] = describe(e);
      } else {
        c.inputs = {catalog_name};
        c.verdict = describe(catalog_entry(catalog_name));
      }
    }
  } catch (const Error& e) {
    err << Json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  emit(c, opt, ms, out);
  return c.exit_code;
}

}  // namespace dalg

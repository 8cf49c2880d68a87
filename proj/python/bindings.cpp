#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dalg/analysis.hpp"
#include "dalg/catalog.hpp"
#include "dalg/cli.hpp"
#include "dalg/error.hpp"
#include "dalg/expr.hpp"
#include "dalg/ritt.hpp"
#include "dalg/version.hpp"

namespace py = pybind11;
using namespace dalg;

namespace {

std::string str(const DiffPoly& p) { return print_expr(DiffRational(p)); }

DiffPoly poly_of(const std::string& text) {
  DiffRational r = parse_expr(text);
  if (!r.is_polynomial()) throw Error(ErrorCode::invalid_argument, "expected a polynomial: " + text);
  return r.numer() * (Rat(1) / r.denom().body().constant_term());
}

// Parses several polynomials into one shared signature.
std::vector<DiffPoly> polys_of(const std::vector<std::string>& texts) {
  std::vector<DiffPoly> out;
  for (const auto& r : parse_exprs(texts)) {
    if (!r.is_polynomial()) throw Error(ErrorCode::invalid_argument, "expected polynomials");
    out.push_back(r.numer() * (Rat(1) / r.denom().body().constant_term()));
  }
  return out;
}

DiffRational equation_of(const std::string& text_or_name) {
  for (const auto& e : catalog())
    if (e.name == text_or_name) return e.equation;
  return parse_expr(text_or_name);
}

}  // namespace

PYBIND11_MODULE(_dalg, m) {
  m.doc() = "Exact differential algebra kernel";
  m.attr("__version__") = version;

  static py::exception<Error> dalg_error(m, "DalgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object code = py::str(std::string(error_code_name(e.code())));
      PyObject* args = Py_BuildValue("(sO)", e.what(), code.ptr());
      PyErr_SetObject(dalg_error.ptr(), args);
      Py_XDECREF(args);
    }
  });

  m.def("normalize", [](const std::string& text) { return print_expr(parse_expr(text)); },
        "Parse and print an expression in canonical form.");
  m.def("derive", [](const std::string& text, unsigned n) {
    DiffRational r = parse_expr(text);
    for (unsigned i = 0; i < n; ++i) r = r.derivative();
    return print_expr(r);
  }, py::arg("expr"), py::arg("n") = 1);
  m.def("info", [](const std::string& text) {
    auto ld = leader_data(poly_of(text));
    py::dict d;
    d["order"] = ld.order ? py::object(py::int_(*ld.order)) : py::object(py::none());
    d["degree"] = ld.degree;
    d["initial"] = ld.initial ? py::object(py::str(str(*ld.initial))) : py::object(py::none());
    d["separant"] = ld.separant ? py::object(py::str(str(*ld.separant))) : py::object(py::none());
    return d;
  });
  m.def("ritt_reduce", [](const std::string& q, const std::string& p) {
    auto ps = polys_of({q, p});
    auto cert = ritt_reduce(ps[0], ps[1]);
    py::dict d;
    d["remainder"] = str(cert.remainder);
    d["sep_exp"] = cert.sep_exp;
    d["init_exp"] = cert.init_exp;
    d["verified"] = cert.verify(ps[0]);
    return d;
  });
  m.def("member", [](const std::string& q, const std::string& p, bool assume_irreducible) {
    auto ps = polys_of({q, p});
    return ideal_membership_IP(ps[0], ps[1], assume_irreducible);
  }, py::arg("q"), py::arg("p"), py::arg("assume_irreducible") = false);
  m.def("prolong", [](const std::string& p, unsigned k) {
    std::vector<std::string> out;
    for (const auto& d : prolong(poly_of(p), k)) out.push_back(str(d));
    return out;
  });
  m.def("wronskian", [](const std::vector<std::string>& fs, std::optional<std::string> modulo) {
    std::vector<std::string> texts = fs;
    if (modulo) texts.push_back(*modulo);
    auto ps = polys_of(texts);
    std::optional<DiffPoly> mod;
    if (modulo) mod = ps.back(), ps.pop_back();
    auto r = constants_linear_independence(ps, mod);
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    d["determinant"] = str(r.determinant);
    std::vector<std::string> rel;
    for (const auto& c : r.relation) rel.push_back(to_string(c));
    d["relation"] = rel;
    return d;
  }, py::arg("fs"), py::arg("modulo") = std::nullopt);
  m.def("trdeg_check", [](const std::string& eq, unsigned k) {
    auto r = generic_trdeg_check(equation_of(eq), k);
    py::dict d;
    d["dimension"] = r.dimension;
    d["expected_dimension"] = r.expected_dimension;
    d["elimination_is_zero"] = r.low_order_relations.is_zero_ideal();
    d["pass"] = r.pass;
    return d;
  });
  m.def("witness_check", [](const std::string& eq, unsigned m_copies, const std::string& relation, unsigned k) {
    DiffRational e = equation_of(eq);
    auto sig = witness_signature(e, m_copies);
    auto v = dm_witness_check(e, m_copies, parse_expr_in(relation, sig).numer(), k);
    return v.label();
  });
  m.def("catalog", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : catalog()) out.emplace_back(e.name, print_expr(e.equation));
    return out;
  });
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run a CLI invocation in process; returns (exit_code, stdout, stderr).");
}

#include "dalg/catalog.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "dalg/error.hpp"

#ifndef DALG_DATA_DIR
#define DALG_DATA_DIR "data"
#endif

namespace dalg {

namespace {

const SignaturePtr& sig() { return default_signature(); }

DiffPoly u(std::uint32_t k) { return DiffPoly::jet(sig(), 0, k); }

DiffPoly c(const Rat& v) { return DiffPoly::constant(sig(), v); }

CatalogEntry make_entry(std::string name, DiffRational eq, std::string note) {
  eq.require_equation();
  auto order = leader_data(eq.numer()).order;
  return {std::move(name), std::move(eq), order.value_or(0), std::move(note)};
}

void check_autonomous(const DiffRational& r, const char* what) {
  for (const DiffPoly* p : {&r.numer(), &r.denom()})
    if (auto ord = p->order(); ord && *ord > 0)
      throw Error(ErrorCode::not_autonomous_coefficient,
                  std::string("Lienard coefficient ") + what + " involves a derivative: " + p->to_string());
}

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::invalid_modular_data, msg); }

}  // namespace

DiffRational schwarzian() { return DiffRational(c(2) * u(3) * u(1) - c(3) * u(2).pow(2), c(2) * u(1).pow(2)); }

DiffRational j_equation() {
  DiffPoly shift = u(0) - c(1728);
  DiffRational term(u(0).pow(2) - c(1968) * u(0) + c(2654208), c(2) * u(0).pow(2) * shift.pow(2));
  return schwarzian() + term;
}

DiffRational poizat_equation() { return DiffRational(u(2), u(1)) - DiffRational(c(1), u(0)); }

DiffRational harmonic_oscillator() { return DiffRational(u(2) + u(0)); }

DiffRational constant_equation() { return DiffRational(u(1)); }

DiffRational lienard(const DiffRational& f, const DiffRational& g) {
  check_autonomous(f, "f");
  check_autonomous(g, "g");
  return DiffRational(u(2)) + f * DiffRational(u(1)) + g;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.push_back(make_entry("schwarzian", schwarzian(), "Schwarzian derivative S(u) = 0"));
    out.push_back(make_entry("chi", j_equation(), "third-order equation satisfied by the j-function"));
    out.push_back(make_entry("poizat", poizat_equation(), "u''/u' = 1/u, strongly minimal with trivial geometry"));
    out.push_back(make_entry("harmonic", harmonic_oscillator(), "harmonic oscillator u'' + u"));
    out.push_back(make_entry("constant", constant_equation(), "u' = 0, the field of constants"));
    out.push_back(make_entry("lienard-u", lienard(DiffRational(u(0)), DiffRational()), "Lienard type with f = u, g = 0"));
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::invalid_argument, "unknown catalog entry '" + name + "'");
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ModularPolynomial parse_modular_data(const std::string& text) {
  std::istringstream in(text);
  std::string line, hashed, checksum;
  std::size_t lineno = 0;
  ModularPolynomial out;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Int> terms;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!checksum.empty()) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) bad("content after the checksum line");
      continue;
    }
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) {
      hashed += line + "\n";
      continue;
    }
    if (head == "checksum") {
      if (!(ls >> checksum)) bad("missing checksum value");
      continue;
    }
    hashed += line + "\n";
    if (head == "vars") {
      if (have_vars) bad("duplicate vars line");
      if (!(ls >> out.x_name >> out.y_name) || out.x_name == out.y_name) bad("vars line needs two distinct names");
      have_vars = true;
      continue;
    }
    if (!have_vars) bad("first line must be 'vars X Y'");
    std::string j_text, c_text;
    if (!(ls >> j_text >> c_text)) bad("line " + std::to_string(lineno) + ": expected 'i j coefficient'");
    Rat coef;
    std::uint32_t i = 0, j = 0;
    try {
      i = static_cast<std::uint32_t>(std::stoul(head));
      j = static_cast<std::uint32_t>(std::stoul(j_text));
      coef = parse_rat(c_text);
    } catch (const std::exception&) {
      bad("line " + std::to_string(lineno) + ": malformed record");
    }
    if (!is_integer(coef)) bad("line " + std::to_string(lineno) + ": coefficient is not an integer");
    if (!terms.emplace(std::pair{i, j}, coef.get_num()).second)
      bad("line " + std::to_string(lineno) + ": duplicate exponent pair");
  }
  if (!have_vars) bad("missing vars line");
  if (checksum.empty()) bad("missing checksum line (truncated file?)");
  if (fnv1a64_hex(hashed) != checksum) bad("checksum mismatch: file says " + checksum + ", content hashes to " + fnv1a64_hex(hashed));

  std::uint32_t dx = 0, dy = 0;
  for (const auto& [e, coef] : terms)
    if (coef != 0) dx = std::max(dx, e.first), dy = std::max(dy, e.second);
  if (dx == 0 || dy == 0) bad("polynomial must involve both variables");
  auto get = [&terms](std::uint32_t i, std::uint32_t j) {
    auto it = terms.find({i, j});
    return it == terms.end() ? Int(0) : it->second;
  };
  // Monic in X: the coefficient of X^dx is the constant 1; likewise in Y.
  for (const auto& [e, coef] : terms) {
    if (coef == 0) continue;
    if (e.first == dx && !(e.second == 0 && coef == 1)) bad("not monic in " + out.x_name);
    if (e.second == dy && !(e.first == 0 && coef == 1)) bad("not monic in " + out.y_name);
    if (get(e.second, e.first) != coef) bad("not symmetric under exchanging the variables");
  }
  const VarKey x = VarKey::of_jet(0, 0), y = VarKey::of_jet(1, 0);
  std::vector<MPoly::Term> raw;
  for (const auto& [e, coef] : terms) {
    std::vector<Monomial::Entry> m;
    if (e.first) m.emplace_back(x, e.first);
    if (e.second) m.emplace_back(y, e.second);
    raw.emplace_back(Monomial::from_entries(std::move(m)), Rat(coef));
  }
  out.poly = MPoly::normalize(std::move(raw), default_order());
  return out;
}

ModularPolynomial load_modular_data(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_modular_data(buf.str());
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("DALG_DATA_DIR"); env && *env) return env;
  return DALG_DATA_DIR;
}

}  // namespace dalg

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dalg/diffrational.hpp"

namespace dalg {

struct CatalogEntry {
  std::string name;
  DiffRational equation;
  std::uint32_t order = 0;
  std::string note;
};

/// S(u) = (u''/u')' - (u''/u')^2 / 2 = (2u'''u' - 3u''^2) / (2u'^2).
DiffRational schwarzian();
/// chi(u) = S(u) + (u^2 - 1968u + 2654208) / (2u^2 (u - 1728)^2), the equation of the j-function.
DiffRational j_equation();
/// u''/u' - 1/u.
DiffRational poizat_equation();
/// u'' + u.
DiffRational harmonic_oscillator();
/// u' (the constants).
DiffRational constant_equation();
/// u'' + f(u) u' + g(u). Throws Error(not_autonomous_coefficient) when f or g
/// involves a jet of positive order.
DiffRational lienard(const DiffRational& f, const DiffRational& g);

/// Named entries: schwarzian, chi, poizat, harmonic, constant, lienard-u.
const std::vector<CatalogEntry>& catalog();
/// Throws Error(invalid_argument) for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// A modular polynomial F(X, Y) with X = jet (0, 0) and Y = jet (1, 0).
struct ModularPolynomial {
  std::string x_name;
  std::string y_name;
  MPoly poly;
};

/// Loads the text format
///   vars X Y
///   i j coefficient     (one line per term)
///   checksum <hex>      (FNV-1a 64 of all bytes preceding this line)
/// and validates checksum, integrality, monicity in X and in Y, and symmetry.
/// Throws Error(invalid_modular_data).
ModularPolynomial load_modular_data(const std::filesystem::path& path);
ModularPolynomial parse_modular_data(const std::string& text);

/// FNV-1a 64-bit hash, printed as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

/// Directory holding the shipped data files ($DALG_DATA_DIR overrides the build default).
std::filesystem::path data_directory();

}  // namespace dalg

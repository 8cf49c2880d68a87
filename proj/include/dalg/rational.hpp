#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dalg {

/// Exact rational number. GMP keeps mpq_class values canonical
/// (reduced, positive denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// "p" or "p/q".
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Parses "p" or "p/q" with optional sign. Throws Error(parse_error).
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace dalg

#pragma once

#include <string>
#include <vector>

#include "dalg/diffrational.hpp"

namespace dalg {

/// Parses expressions in the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' '(' INT ')' | '^' INT)?
///   base   := NUMBER | VARREF | IDENT | '(' expr ')' | '-' factor
///   VARREF := IDENT ('\'')* | IDENT '^(' INT ')'
/// `vars` names the differential indeterminates; any other identifier is a
/// constant parameter. All texts share one signature whose parameters are the
/// identifiers found, sorted by name. Throws Error(parse_error) with line and
/// column.
std::vector<DiffRational> parse_exprs(const std::vector<std::string>& texts,
                                      const std::vector<std::string>& vars = {"u"},
                                      const std::vector<std::string>& extra_parameters = {});
DiffRational parse_expr(const std::string& text, const std::vector<std::string>& vars = {"u"});

/// Parses into a given signature; identifiers outside it are a parse error.
DiffRational parse_expr_in(const std::string& text, const SignaturePtr& sig);

/// "numer" when the denominator is 1, "(numer)/(denom)" otherwise.
std::string print_expr(const DiffRational& r);

/// Comma-separated list of names, e.g. "u,v".
std::vector<std::string> split_names(const std::string& list);

}  // namespace dalg

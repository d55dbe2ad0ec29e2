#pragma once

#include <string>
#include <vector>

#include "qhsing/poly.hpp"

namespace qhsing {

/// Parse polynomial text over the given ordered variable list.
///
/// Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' uint)?
///   coeff  := int ('/' uint)?
///
/// Products require an explicit '*'; parentheses are not part of the
/// grammar. Errors carry the byte offset of the offending token.
Poly parse_polynomial(const std::string& text,
                      const std::vector<std::string>& vars);

/// Canonical rendering; parse_polynomial(to_string(p)) == p.
std::string to_string(const Poly& p, const std::vector<std::string>& vars);

/// "z1", "z2", ..., "z<count>".
std::vector<std::string> default_vars(int count);

}  // namespace qhsing

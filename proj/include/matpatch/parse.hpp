#pragma once

#include <string>

#include "matpatch/ringelem.hpp"

namespace matpatch {

// Polynomial expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var | factor '^' nat | '(' expr ')'
//   coeff  := integer | integer '/' integer
// Whitespace insignificant. Errors carry the offending position.
RingElem parse_poly(const std::string& src, const SpecPtr& spec);

// Parses a relation string into an oriented rewrite rule: the first term as
// written is the rule head (its coefficient must be +-1), the remaining terms
// move to the right-hand side.
RewriteRule parse_relation(const std::string& src, const Domain& base,
                           const std::vector<std::string>& vars);

} // namespace matpatch

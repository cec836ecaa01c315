#pragma once

#include <string>
#include <vector>

#include "coverforge/polynomial.hpp"

namespace coverforge {

/// Parses the canonical polynomial syntax: terms joined by +/-, a term is
/// `coef*mono`, `mono` or `coef`; coef is `a` or `a/b`; mono is `var^e`
/// factors joined by `*`. Parenthesized subexpressions are accepted as a
/// convenience superset (`1/2*(z1*w2+z2*w1)`). Unknown variables and syntax
/// errors raise parse_error with a 1-based line/column.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Problem file: a `ring <vars...> : <order>` line, `name = <polynomial>`
/// generator lines in order, then optionally
/// `tracefree = <linear form>;<linear form>;...`. The trace-free forms are in
/// the solver's unknown names, so they are kept as raw text here.
struct ParsedProblem {
    RingPtr ring;
    std::vector<std::string> generator_names;
    std::vector<Polynomial> generators;
    std::vector<std::string> tracefree_texts;
};

ParsedProblem parse_problem(const std::string& text);

} // namespace coverforge

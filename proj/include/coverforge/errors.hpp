#pragma once

#include <stdexcept>
#include <string>

namespace coverforge {

// Error taxonomy shared by the engine and the CLI exit-code contract:
// parse errors -> 1, precondition-class errors -> 2, regression
// mismatches -> 3, everything else -> 4.

struct parse_error : std::runtime_error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " +
                             std::to_string(col) + ")"),
          line(ln), column(col) {}
};

// Mixed ring contexts, unmapped variables, and similar caller mistakes.
struct context_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix shape violations (pfaffian4 on a non-skew matrix, product shapes).
struct shape_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degree_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated operation preconditions (e.g. a c-point off the relation locus).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The cover algorithm's hypotheses failed on the input (non-minimal q,
// nonlinear first syzygy, ...).
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A catalog reproduction no longer matches its expected artifact.
struct regression_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// States the engine can only reach through a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace coverforge

#pragma once

#include <stdexcept>
#include <string>

namespace bq {

// Domain-rule failures (axiom violations, non-unit parameters, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 1-based line number when known.
struct parse_error : std::runtime_error {
    int line = 0;
    explicit parse_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// Exhaustive-search cap exceeded.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bq

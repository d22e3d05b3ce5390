#pragma once

#include <stdexcept>
#include <string>

namespace qmat {

/// Domain error (bad arguments, division by zero, mismatched ring sizes).
/// Rendered once at the CLI boundary; library code throws and never aborts.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error from the expression parser, with 1-based position info.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int col_)
        : error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace qmat

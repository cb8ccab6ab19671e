#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tabkey/tableau.hpp"

namespace tabkey {

class SyntaxError : public std::runtime_error {
public:
    /// `line` and `column` are 1-based character positions.
    SyntaxError(int line, int column, const std::string& what);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Reads one tableau. Format: an optional header line `n=<bound>`, then one
/// row per line with entries separated by spaces. A blank line or the end of
/// input terminates the tableau; leading blank lines are skipped. Without a
/// header the bound is the largest entry (1 for the empty tableau).
///
/// Malformed text raises SyntaxError; a well-formed grid that is not
/// semistandard raises TableauError.
Tableau parse_tableau(std::string_view text);

/// Inverse of parse_tableau(). Rows end in '\n'; the header is written only
/// when the bound differs from the default the parser would infer.
std::string format_tableau(const Tableau& t);

/// Entries of one column, e.g. "(1,4,6)".
std::string format_sequence(const std::vector<Entry>& values);

} // namespace tabkey

#include "tabkey/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <vector>

namespace tabkey {

SyntaxError::SyntaxError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column) {}

namespace {

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(),
                       [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; });
}

int parse_positive(std::string_view token, int line, int column) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
        throw SyntaxError(line, column, "entry '" + std::string(token) + "' is too large");
    }
    if (ec != std::errc() || ptr != last || token.front() == '-' || token.front() == '+') {
        throw SyntaxError(line, column, "expected a positive integer, got '" +
                                            std::string(token) + "'");
    }
    if (value < 1) {
        throw SyntaxError(line, column, "entries must be positive");
    }
    return value;
}

std::vector<Entry> parse_row(std::string_view line, int line_number) {
    std::vector<Entry> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const char ch = line[pos];
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') {
            ++end;
        }
        row.push_back(parse_positive(line.substr(pos, end - pos), line_number,
                                     static_cast<int>(pos + 1)));
        pos = end;
    }
    return row;
}

} // namespace

Tableau parse_tableau(std::string_view text) {
    std::vector<std::vector<Entry>> rows;
    int bound = 0;
    bool started = false;
    int line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(pos, end - pos);
        ++line_number;
        pos = end + 1;

        if (is_blank(line)) {
            if (started) {
                break;
            }
            continue;
        }
        if (!started && line.rfind("n=", 0) == 0) {
            std::string_view digits = line.substr(2);
            while (!digits.empty() && (digits.back() == '\r' || digits.back() == ' ')) {
                digits.remove_suffix(1);
            }
            if (digits.empty()) {
                throw SyntaxError(line_number, 3, "missing entry bound after 'n='");
            }
            bound = parse_positive(digits, line_number, 3);
            started = true;
            continue;
        }
        started = true;
        rows.push_back(parse_row(line, line_number));
    }

    if (bound == 0) {
        bound = 1;
        for (const auto& row : rows) {
            for (Entry x : row) {
                bound = std::max(bound, x);
            }
        }
    }
    return Tableau::from_rows(rows, bound);
}

std::string format_tableau(const Tableau& t) {
    std::string out;
    if (t.entry_bound() != std::max(1, t.max_entry())) {
        out += "n=" + std::to_string(t.entry_bound()) + "\n";
    }
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string format_sequence(const std::vector<Entry>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out + ")";
}

} // namespace tabkey

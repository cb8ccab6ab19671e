#include "tabkey/skew_tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tabkey {

SkewTableau::SkewTableau(std::vector<SkewColumn> columns, Entry entry_bound)
    : columns_(std::move(columns)), bound_(entry_bound) {
    for (const auto& column : columns_) {
        if (column.offset < 0) {
            throw std::invalid_argument("skew tableau: negative offset");
        }
        for (Entry x : column.entries) {
            if (x < 1 || x > bound_) {
                throw std::invalid_argument("skew tableau: entry out of bound");
            }
        }
    }
    if (auto problem = first_violation(); !problem.empty()) {
        throw std::invalid_argument("skew tableau: " + problem);
    }
}

SkewTableau::SkewTableau(const Tableau& t) : bound_(t.entry_bound()) {
    columns_.reserve(t.num_columns());
    for (const auto& column : t.columns()) {
        columns_.push_back(SkewColumn{0, column});
    }
}

SkewTableau SkewTableau::unchecked(std::vector<SkewColumn> columns, Entry entry_bound) {
    SkewTableau u;
    u.columns_ = std::move(columns);
    u.bound_ = entry_bound;
    return u;
}

int SkewTableau::num_boxes() const noexcept {
    int total = 0;
    for (const auto& column : columns_) {
        total += column.length();
    }
    return total;
}

std::vector<int> SkewTableau::lengths() const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const auto& column : columns_) {
        out.push_back(column.length());
    }
    return out;
}

std::vector<int> SkewTableau::offsets() const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const auto& column : columns_) {
        out.push_back(column.offset);
    }
    return out;
}

bool SkewTableau::is_box(int column, int row) const noexcept {
    return column >= 0 && static_cast<std::size_t>(column) < columns_.size() &&
           columns_[static_cast<std::size_t>(column)].occupies(row);
}

std::optional<Entry> SkewTableau::value(int column, int row) const noexcept {
    if (!is_box(column, row)) {
        return std::nullopt;
    }
    return columns_[static_cast<std::size_t>(column)].at_row(row);
}

bool SkewTableau::is_straight() const noexcept {
    std::size_t used = columns_.size();
    while (used > 0 && columns_[used - 1].entries.empty()) {
        --used;
    }
    for (std::size_t c = 0; c < used; ++c) {
        if (columns_[c].offset != 0 || columns_[c].entries.empty()) {
            return false;
        }
        if (c > 0 && columns_[c].length() > columns_[c - 1].length()) {
            return false;
        }
    }
    return true;
}

Tableau SkewTableau::to_tableau() const {
    if (!is_straight()) {
        throw std::logic_error("skew tableau is not of straight shape: " + to_string());
    }
    std::vector<Column> columns;
    for (const auto& column : columns_) {
        if (!column.entries.empty()) {
            columns.push_back(column.entries);
        }
    }
    return Tableau(std::move(columns), bound_);
}

std::string SkewTableau::first_violation() const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        const auto& entries = columns_[c].entries;
        for (std::size_t r = 1; r < entries.size(); ++r) {
            if (entries[r - 1] >= entries[r]) {
                return "column " + std::to_string(c + 1) + " is not strictly increasing";
            }
        }
        if (c + 1 == columns_.size()) {
            break;
        }
        const auto& left = columns_[c];
        const auto& right = columns_[c + 1];
        const int lo = std::max(left.offset, right.offset);
        const int hi = std::min(left.end_row(), right.end_row());
        for (int row = lo; row < hi; ++row) {
            if (left.at_row(row) > right.at_row(row)) {
                return "row " + std::to_string(row + 1) + " decreases between columns " +
                       std::to_string(c + 1) + " and " + std::to_string(c + 2);
            }
        }
    }
    return {};
}

std::string SkewTableau::to_string() const {
    int rows = 0;
    for (const auto& column : columns_) {
        rows = std::max(rows, column.end_row());
    }
    std::ostringstream out;
    for (int row = 0; row < rows; ++row) {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c > 0) {
                out << ' ';
            }
            if (auto v = value(static_cast<int>(c), row)) {
                out << *v;
            } else {
                out << '.';
            }
        }
        out << '\n';
    }
    return out.str();
}

} // namespace tabkey

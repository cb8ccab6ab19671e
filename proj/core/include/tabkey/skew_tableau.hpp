#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tabkey/tableau.hpp"

namespace tabkey {

/// A column of a skew tableau: `offset` boxes are missing from the top,
/// then `entries` fill consecutive rows.
struct SkewColumn {
    int offset = 0;
    Column entries;

    int length() const noexcept { return static_cast<int>(entries.size()); }
    /// One past the last occupied row.
    int end_row() const noexcept { return offset + length(); }
    bool occupies(int row) const noexcept { return row >= offset && row < end_row(); }
    Entry at_row(int row) const { return entries[static_cast<std::size_t>(row - offset)]; }

    friend bool operator==(const SkewColumn&, const SkewColumn&) = default;
};

/// Column-major skew tableau. Columns are strictly increasing; horizontally
/// adjacent boxes weakly increase. Column lengths need not be monotone, and
/// a column may be empty (its offset is then the depth of the removed part).
class SkewTableau {
public:
    SkewTableau() = default;
    SkewTableau(std::vector<SkewColumn> columns, Entry entry_bound);
    explicit SkewTableau(const Tableau& t);

    /// Skips validation. For internal use by slide routines that maintain
    /// the invariants themselves.
    static SkewTableau unchecked(std::vector<SkewColumn> columns, Entry entry_bound);

    const std::vector<SkewColumn>& columns() const noexcept { return columns_; }
    std::vector<SkewColumn>& mutable_columns() noexcept { return columns_; }
    const SkewColumn& column(std::size_t i) const { return columns_[i]; }
    std::size_t num_columns() const noexcept { return columns_.size(); }
    Entry entry_bound() const noexcept { return bound_; }
    int num_boxes() const noexcept;

    std::vector<int> lengths() const;
    std::vector<int> offsets() const;

    bool is_box(int column, int row) const noexcept;
    std::optional<Entry> value(int column, int row) const noexcept;

    /// True when every offset is zero and the lengths are weakly decreasing
    /// (trailing empty columns are ignored).
    bool is_straight() const noexcept;
    /// Converts a straight skew tableau; throws std::logic_error otherwise.
    Tableau to_tableau() const;

    /// Column strictness and row weakness; returns a description of the
    /// first violation or an empty string.
    std::string first_violation() const;

    std::string to_string() const;

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

private:
    std::vector<SkewColumn> columns_;
    Entry bound_ = 1;
};

} // namespace tabkey

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabkey/shape.hpp"

namespace tabkey {

using Entry = int;
/// One column of a tableau, top to bottom.
using Column = std::vector<Entry>;

class TableauError : public std::runtime_error {
public:
    enum class Kind {
        NonDecreasingColumn,
        DecreasingRow,
        RaggedShape,
        EntryOutOfBound,
        ShapeMismatch,
    };

    /// `row` and `column` are 1-based; 0 when the error is not tied to a cell.
    TableauError(Kind kind, int row, int column, const std::string& what);

    Kind kind() const noexcept { return kind_; }
    int row() const noexcept { return row_; }
    int column() const noexcept { return column_; }

private:
    Kind kind_;
    int row_;
    int column_;
};

const char* to_string(TableauError::Kind kind);

/// A semistandard Young tableau stored column by column, together with the
/// bound n on its entries. Entries lie in [1, n], strictly increase down
/// each column and weakly increase along each row.
class Tableau {
public:
    /// The empty tableau with entry bound 1.
    Tableau() = default;

    /// Validates and builds a tableau from its columns.
    Tableau(std::vector<Column> columns, Entry entry_bound);

    /// Validates a top-left justified grid of rows. Errors report the first
    /// violated cell in row-major order.
    static Tableau from_rows(const std::vector<std::vector<Entry>>& rows, Entry entry_bound);

    const std::vector<Column>& columns() const noexcept { return columns_; }
    const Column& column(std::size_t i) const { return columns_[i]; }
    Entry entry_bound() const noexcept { return bound_; }
    Shape shape() const;

    std::size_t num_columns() const noexcept { return columns_.size(); }
    int num_boxes() const noexcept;
    bool empty() const noexcept { return columns_.empty(); }

    /// Entry in 0-based (column, row).
    Entry at(std::size_t column, std::size_t row) const { return columns_[column][row]; }
    Entry bottom(std::size_t column) const { return columns_[column].back(); }
    Entry max_entry() const noexcept;

    std::vector<std::vector<Entry>> rows() const;
    /// Entries read top to bottom within a column, columns left to right.
    std::vector<Entry> column_word() const;

    /// Same columns, different bound. Throws if an entry exceeds it.
    Tableau with_entry_bound(Entry entry_bound) const;
    /// Columns [first, num_columns()).
    Tableau drop_columns(std::size_t first) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<Column> columns_;
    Entry bound_ = 1;
};

/// Each column's entries also appear in the column to its left.
bool is_key(const Tableau& t);

/// Entrywise comparison of two tableaux of the same shape.
/// Throws TableauError::ShapeMismatch otherwise.
bool entrywise_leq(const Tableau& a, const Tableau& b);

/// Content vector of length entry_bound(): component i counts entry i+1.
std::vector<int> weight(const Tableau& t);

/// Applies e -> n+1-e to every entry, rotates the diagram by a half turn and
/// rectifies. The result has the same shape and bound; for one column this
/// just reverses the complemented entries. An involution.
Tableau complement(const Tableau& t);

/// Applies e -> n+1-e and reverses every column in place. Only closed on
/// tableaux whose column sets are nested, such as keys. Throws TableauError
/// if the result is not semistandard.
Tableau complement_columns(const Tableau& t);

} // namespace tabkey

#include "tabkey/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "tabkey/jdt.hpp"
#include "tabkey/skew_tableau.hpp"

namespace tabkey {

namespace {

std::string cell_message(const char* what, int row, int column) {
    return std::string(what) + " at row " + std::to_string(row) + ", column " +
           std::to_string(column);
}

} // namespace

TableauError::TableauError(Kind kind, int row, int column, const std::string& what)
    : std::runtime_error(what), kind_(kind), row_(row), column_(column) {}

const char* to_string(TableauError::Kind kind) {
    switch (kind) {
    case TableauError::Kind::NonDecreasingColumn: return "NonDecreasingColumn";
    case TableauError::Kind::DecreasingRow: return "DecreasingRow";
    case TableauError::Kind::RaggedShape: return "RaggedShape";
    case TableauError::Kind::EntryOutOfBound: return "EntryOutOfBound";
    case TableauError::Kind::ShapeMismatch: return "ShapeMismatch";
    }
    return "?";
}

Tableau Tableau::from_rows(const std::vector<std::vector<Entry>>& rows, Entry entry_bound) {
    if (entry_bound < 1) {
        throw TableauError(TableauError::Kind::EntryOutOfBound, 0, 0,
                           "entry bound must be positive");
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty() || (r > 0 && rows[r].size() > rows[r - 1].size())) {
            throw TableauError(TableauError::Kind::RaggedShape, static_cast<int>(r + 1), 0,
                               "rows are not left-justified with weakly decreasing lengths "
                               "(row " + std::to_string(r + 1) + ")");
        }
    }
    // Row-major scan so the first bad cell is the one reported.
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const Entry x = rows[r][c];
            const int row = static_cast<int>(r + 1);
            const int col = static_cast<int>(c + 1);
            if (x < 1 || x > entry_bound) {
                throw TableauError(TableauError::Kind::EntryOutOfBound, row, col,
                                   cell_message("entry out of bound", row, col));
            }
            if (c > 0 && rows[r][c - 1] > x) {
                throw TableauError(TableauError::Kind::DecreasingRow, row, col,
                                   cell_message("row decreases", row, col));
            }
            if (r > 0 && rows[r - 1][c] >= x) {
                throw TableauError(TableauError::Kind::NonDecreasingColumn, row, col,
                                   cell_message("column does not strictly increase", row, col));
            }
        }
    }
    std::vector<Column> columns(rows.empty() ? 0 : rows.front().size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            columns[c].push_back(row[c]);
        }
    }
    Tableau t;
    t.columns_ = std::move(columns);
    t.bound_ = entry_bound;
    return t;
}

Tableau::Tableau(std::vector<Column> columns, Entry entry_bound) {
    for (std::size_t c = 1; c < columns.size(); ++c) {
        if (columns[c].size() > columns[c - 1].size()) {
            throw TableauError(TableauError::Kind::RaggedShape, 0, static_cast<int>(c + 1),
                               "column lengths must be weakly decreasing");
        }
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].empty()) {
            throw TableauError(TableauError::Kind::RaggedShape, 0, static_cast<int>(c + 1),
                               "columns must be nonempty");
        }
    }
    std::vector<std::vector<Entry>> rows(columns.empty() ? 0 : columns.front().size());
    for (const auto& column : columns) {
        for (std::size_t r = 0; r < column.size(); ++r) {
            rows[r].push_back(column[r]);
        }
    }
    *this = from_rows(rows, entry_bound);
}

Shape Tableau::shape() const {
    std::vector<int> lengths;
    lengths.reserve(columns_.size());
    for (const auto& column : columns_) {
        lengths.push_back(static_cast<int>(column.size()));
    }
    return Shape(std::move(lengths));
}

int Tableau::num_boxes() const noexcept {
    int total = 0;
    for (const auto& column : columns_) {
        total += static_cast<int>(column.size());
    }
    return total;
}

Entry Tableau::max_entry() const noexcept {
    Entry best = 0;
    for (const auto& column : columns_) {
        best = std::max(best, column.back());
    }
    return best;
}

std::vector<std::vector<Entry>> Tableau::rows() const {
    std::vector<std::vector<Entry>> out(columns_.empty() ? 0 : columns_.front().size());
    for (const auto& column : columns_) {
        for (std::size_t r = 0; r < column.size(); ++r) {
            out[r].push_back(column[r]);
        }
    }
    return out;
}

std::vector<Entry> Tableau::column_word() const {
    std::vector<Entry> word;
    for (const auto& column : columns_) {
        word.insert(word.end(), column.begin(), column.end());
    }
    return word;
}

Tableau Tableau::with_entry_bound(Entry entry_bound) const {
    if (entry_bound < 1 || max_entry() > entry_bound) {
        throw TableauError(TableauError::Kind::EntryOutOfBound, 0, 0,
                           "entry bound " + std::to_string(entry_bound) +
                               " is below the largest entry");
    }
    Tableau t = *this;
    t.bound_ = entry_bound;
    return t;
}

Tableau Tableau::drop_columns(std::size_t first) const {
    Tableau t;
    t.bound_ = bound_;
    if (first < columns_.size()) {
        t.columns_.assign(columns_.begin() + static_cast<std::ptrdiff_t>(first), columns_.end());
    }
    return t;
}

bool is_key(const Tableau& t) {
    for (std::size_t c = 1; c < t.num_columns(); ++c) {
        const auto& left = t.column(c - 1);
        const auto& right = t.column(c);
        if (!std::includes(left.begin(), left.end(), right.begin(), right.end())) {
            return false;
        }
    }
    return true;
}

bool entrywise_leq(const Tableau& a, const Tableau& b) {
    if (a.shape() != b.shape()) {
        throw TableauError(TableauError::Kind::ShapeMismatch, 0, 0,
                           "entrywise comparison of tableaux with shapes " +
                               a.shape().to_string() + " and " + b.shape().to_string());
    }
    for (std::size_t c = 0; c < a.num_columns(); ++c) {
        for (std::size_t r = 0; r < a.column(c).size(); ++r) {
            if (a.at(c, r) > b.at(c, r)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> weight(const Tableau& t) {
    std::vector<int> w(static_cast<std::size_t>(t.entry_bound()), 0);
    for (const auto& column : t.columns()) {
        for (Entry x : column) {
            ++w[static_cast<std::size_t>(x - 1)];
        }
    }
    return w;
}

Tableau complement(const Tableau& t) {
    if (t.empty()) {
        return t;
    }
    const Entry n = t.entry_bound();
    const int height = static_cast<int>(t.column(0).size());
    const std::size_t k = t.num_columns();
    // Column c of the rotated tableau is column k-1-c of t, bottom-justified
    // against the first column and read upside down.
    std::vector<SkewColumn> rotated;
    rotated.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        const Column& source = t.column(k - 1 - c);
        SkewColumn column;
        column.offset = height - static_cast<int>(source.size());
        for (auto it = source.rbegin(); it != source.rend(); ++it) {
            column.entries.push_back(n + 1 - *it);
        }
        rotated.push_back(std::move(column));
    }
    return rectify(SkewTableau(std::move(rotated), n));
}

Tableau complement_columns(const Tableau& t) {
    const Entry n = t.entry_bound();
    std::vector<Column> columns;
    columns.reserve(t.num_columns());
    for (const auto& source : t.columns()) {
        Column column;
        for (auto it = source.rbegin(); it != source.rend(); ++it) {
            column.push_back(n + 1 - *it);
        }
        columns.push_back(std::move(column));
    }
    return Tableau(std::move(columns), n);
}

} // namespace tabkey

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tabkey/shape.hpp"
#include "tabkey/tableau.hpp"

namespace tabkey {

/// Streams every semistandard tableau of a shape with entries in [1, n],
/// in lexicographic order of the column reading word (columns left to
/// right, each read top to bottom). Empty when n is smaller than the
/// number of rows. The empty shape yields the empty tableau once.
class TableauEnumerator {
public:
    TableauEnumerator(Shape shape, Entry entry_bound);

    std::optional<Tableau> next();

private:
    bool advance();
    // Smallest legal value for cell i given the cells before it.
    Entry lower_bound(std::size_t i) const;
    void fill_minimal_from(std::size_t i);

    Shape shape_;
    Entry bound_;
    // Cell i of the reading word: its column, row, and the index of the
    // cell to its left (or npos).
    std::vector<std::size_t> column_of_;
    std::vector<int> row_of_;
    std::vector<std::size_t> left_of_;
    std::vector<Entry> word_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Tableau> enumerate_tableaux(const Shape& shape, Entry entry_bound);

void for_each_tableau(const Shape& shape, Entry entry_bound,
                      const std::function<void(const Tableau&)>& visit);

} // namespace tabkey

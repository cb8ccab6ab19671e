#include "tabkey/enumerate.hpp"

#include <algorithm>
#include <limits>

namespace tabkey {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

TableauEnumerator::TableauEnumerator(Shape shape, Entry entry_bound)
    : shape_(std::move(shape)), bound_(entry_bound) {
    std::vector<std::size_t> column_start;
    std::size_t index = 0;
    for (std::size_t c = 0; c < shape_.num_columns(); ++c) {
        column_start.push_back(index);
        for (int r = 0; r < shape_[c]; ++r) {
            column_of_.push_back(c);
            row_of_.push_back(r);
            left_of_.push_back(c == 0 ? npos : column_start[c - 1] + static_cast<std::size_t>(r));
            ++index;
        }
    }
    word_.assign(index, 0);
    if (shape_.num_rows() > bound_) {
        done_ = true;
    }
}

Entry TableauEnumerator::lower_bound(std::size_t i) const {
    Entry lo = 1;
    if (row_of_[i] > 0) {
        lo = word_[i - 1] + 1;
    }
    if (left_of_[i] != npos) {
        lo = std::max(lo, word_[left_of_[i]]);
    }
    return lo;
}

void TableauEnumerator::fill_minimal_from(std::size_t i) {
    for (; i < word_.size(); ++i) {
        word_[i] = lower_bound(i);
    }
}

bool TableauEnumerator::advance() {
    // Odometer: bump the last cell that can grow, then refill minimally.
    // The cap n - (cells below in the column) keeps every refill feasible.
    for (std::size_t i = word_.size(); i-- > 0;) {
        const int below = shape_[column_of_[i]] - 1 - row_of_[i];
        if (word_[i] < bound_ - below) {
            ++word_[i];
            fill_minimal_from(i + 1);
            return true;
        }
    }
    return false;
}

std::optional<Tableau> TableauEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        fill_minimal_from(0);
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    std::vector<Column> columns(shape_.num_columns());
    for (std::size_t i = 0; i < word_.size(); ++i) {
        columns[column_of_[i]].push_back(word_[i]);
    }
    return Tableau(std::move(columns), bound_);
}

std::vector<Tableau> enumerate_tableaux(const Shape& shape, Entry entry_bound) {
    std::vector<Tableau> out;
    TableauEnumerator stream(shape, entry_bound);
    while (auto t = stream.next()) {
        out.push_back(std::move(*t));
    }
    return out;
}

void for_each_tableau(const Shape& shape, Entry entry_bound,
                      const std::function<void(const Tableau&)>& visit) {
    TableauEnumerator stream(shape, entry_bound);
    while (auto t = stream.next()) {
        visit(*t);
    }
}

} // namespace tabkey

#include "tabkey/scanning.hpp"

#include <algorithm>
#include <stdexcept>

namespace tabkey {

EwisResult ewis(std::span<const Entry> sequence) {
    if (sequence.empty()) {
        throw std::invalid_argument("ewis: empty sequence");
    }
    EwisResult out;
    out.indices.push_back(0);
    out.values.push_back(sequence[0]);
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        if (sequence[i] >= out.values.back()) {
            out.indices.push_back(i);
            out.values.push_back(sequence[i]);
        }
    }
    return out;
}

Column scan_column(const Tableau& t, std::size_t start_column, ScanColumnTrace* trace) {
    if (start_column >= t.num_columns()) {
        throw std::out_of_range("scan_column: no column " + std::to_string(start_column + 1));
    }
    const std::size_t k = t.num_columns();
    // Boxes still present in column c are rows [0, alive[c]). Removed boxes
    // are always the bottom-most present ones, so the rest stays a tableau
    // and the present columns are exactly a prefix of [start_column, k).
    std::vector<int> alive(k, 0);
    for (std::size_t c = start_column; c < k; ++c) {
        alive[c] = static_cast<int>(t.column(c).size());
    }
    const int height = alive[start_column];
    Column out(static_cast<std::size_t>(height));
    if (trace != nullptr) {
        trace->start_column = start_column;
        trace->passes.clear();
    }

    for (int pass = 0; pass < height; ++pass) {
        std::size_t c = start_column;
        Entry last = t.at(c, static_cast<std::size_t>(alive[c] - 1));
        ScanPass record;
        const auto mark = [&](std::size_t column, Entry value) {
            --alive[column];
            if (trace != nullptr) {
                record.boxes.push_back({static_cast<int>(column), alive[column]});
                record.values.push_back(value);
            }
        };
        mark(c, last);
        for (++c; c < k && alive[c] > 0; ++c) {
            const Entry b = t.at(c, static_cast<std::size_t>(alive[c] - 1));
            if (b >= last) {
                last = b;
                mark(c, b);
            }
        }
        out[static_cast<std::size_t>(height - 1 - pass)] = last;
        if (trace != nullptr) {
            trace->passes.push_back(std::move(record));
        }
    }
    return out;
}

namespace {

Tableau scan_all(const Tableau& t, std::vector<ScanColumnTrace>* trace, ScanOptions options) {
    const std::size_t k = t.num_columns();
    std::vector<Column> columns(k);
    for (std::size_t s = k; s-- > 0;) {
        if (options.skip_duplicate_lengths && s + 1 < k &&
            t.column(s).size() == t.column(s + 1).size()) {
            columns[s] = columns[s + 1];
            continue;
        }
        if (trace != nullptr) {
            ScanColumnTrace column_trace;
            columns[s] = scan_column(t, s, &column_trace);
            trace->push_back(std::move(column_trace));
        } else {
            columns[s] = scan_column(t, s);
        }
    }
    if (trace != nullptr) {
        std::reverse(trace->begin(), trace->end());
    }
    return Tableau(std::move(columns), t.entry_bound());
}

} // namespace

Tableau scanning_tableau(const Tableau& t, ScanOptions options) {
    return scan_all(t, nullptr, options);
}

Tableau scanning_tableau(const Tableau& t, std::vector<ScanColumnTrace>& trace,
                         ScanOptions options) {
    trace.clear();
    return scan_all(t, &trace, options);
}

namespace {

// Walks left from the bottom present entry of `last_column`; records the
// row picked in each column.
std::vector<Entry> left_walk(const Tableau& t, std::size_t last_column,
                             std::span<const int> alive, std::vector<int>* rows) {
    std::vector<Entry> sequence;
    sequence.reserve(last_column + 1);
    const int start_row = alive[last_column] - 1;
    if (start_row < 0) {
        throw std::logic_error("left scan: column " + std::to_string(last_column + 1) +
                               " has no boxes left");
    }
    Entry current = t.at(last_column, static_cast<std::size_t>(start_row));
    sequence.push_back(current);
    if (rows != nullptr) {
        (*rows)[last_column] = start_row;
    }
    for (std::size_t c = last_column; c-- > 0;) {
        int row = alive[c] - 1;
        while (row >= 0 && t.at(c, static_cast<std::size_t>(row)) > current) {
            --row;
        }
        if (row < 0) {
            // The row condition guarantees a candidate in a valid tableau.
            throw std::logic_error("left scan: no entry <= " + std::to_string(current) +
                                   " in column " + std::to_string(c + 1));
        }
        current = t.at(c, static_cast<std::size_t>(row));
        sequence.push_back(current);
        if (rows != nullptr) {
            (*rows)[c] = row;
        }
    }
    return sequence;
}

} // namespace

std::vector<Entry> left_scan_sequence(const Tableau& t, std::size_t last_column,
                                      std::span<const int> alive_heights) {
    if (last_column >= t.num_columns() || alive_heights.size() < last_column + 1) {
        throw std::out_of_range("left_scan_sequence: bad column");
    }
    return left_walk(t, last_column, alive_heights, nullptr);
}

std::vector<Entry> left_scan_sequence(const Tableau& t, std::size_t last_column) {
    if (last_column >= t.num_columns()) {
        throw std::out_of_range("left_scan_sequence: bad column");
    }
    std::vector<int> alive;
    for (std::size_t c = 0; c <= last_column; ++c) {
        alive.push_back(static_cast<int>(t.column(c).size()));
    }
    return left_walk(t, last_column, alive, nullptr);
}

Tableau left_key(const Tableau& t) {
    const std::size_t k = t.num_columns();
    std::vector<Column> columns(k);
    std::vector<int> alive(k);
    std::vector<int> picked(k);
    for (std::size_t target = k; target-- > 0;) {
        for (std::size_t c = 0; c <= target; ++c) {
            alive[c] = static_cast<int>(t.column(c).size());
        }
        const int height = alive[target];
        Column& out = columns[target];
        out.assign(static_cast<std::size_t>(height), 0);
        for (int pass = 0; pass < height; ++pass) {
            const auto sequence =
                left_walk(t, target, std::span<const int>(alive.data(), target + 1), &picked);
            out[static_cast<std::size_t>(height - 1 - pass)] = sequence.back();
            // Drop each visited box and everything below it.
            for (std::size_t c = 0; c <= target; ++c) {
                alive[c] = picked[c];
            }
        }
    }
    return Tableau(std::move(columns), t.entry_bound());
}

} // namespace tabkey

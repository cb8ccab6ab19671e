#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tabkey/jdt.hpp"
#include "tabkey/tableau.hpp"

// Right and left keys read directly off a tableau.
//
// Right key: for each start column s, repeatedly take the earliest weakly
// increasing subsequence (EWIS) of the bottom entries of the remaining boxes
// in columns s, s+1, ...; its last member is the next entry of column s of
// the key, filled bottom up, and its boxes are removed before the next pass.
//
// Left key: for each target column t, right to left, walk from the bottom
// remaining entry of column t leftwards, taking in each column the largest
// remaining entry not exceeding the previous one. The entry reached in the
// first column fills the key bottom up; the visited boxes and everything
// below them are removed before the next pass.

namespace tabkey {

/// Earliest weakly increasing subsequence. `indices` are 0-based positions.
struct EwisResult {
    std::vector<std::size_t> indices;
    std::vector<Entry> values;

    Entry last_value() const { return values.back(); }
};

/// Throws std::invalid_argument on an empty sequence.
EwisResult ewis(std::span<const Entry> sequence);

/// One EWIS pass: the boxes it removed and their entries, left to right.
struct ScanPass {
    std::vector<Cell> boxes;
    std::vector<Entry> values;
};

struct ScanColumnTrace {
    std::size_t start_column = 0;
    std::vector<ScanPass> passes;
};

/// Column `start_column` (0-based) of the scanning tableau, top to bottom.
/// Appends the passes to `trace` when given.
Column scan_column(const Tableau& t, std::size_t start_column,
                   ScanColumnTrace* trace = nullptr);

struct ScanOptions {
    /// Scan only the rightmost column of each run of equal lengths and copy
    /// it to the others.
    bool skip_duplicate_lengths = false;
};

/// The right key of `t`, via scanning.
Tableau scanning_tableau(const Tableau& t, ScanOptions options = {});

/// Same, recording every pass of every computed column.
Tableau scanning_tableau(const Tableau& t, std::vector<ScanColumnTrace>& trace,
                         ScanOptions options = {});

/// The left-key walk from the bottom remaining entry of column
/// `last_column` down to column 0. `alive_heights[c]` is how many boxes
/// from the top of column c are still present.
std::vector<Entry> left_scan_sequence(const Tableau& t, std::size_t last_column,
                                      std::span<const int> alive_heights);

/// The walk over the full tableau, starting from the bottom of `last_column`.
std::vector<Entry> left_scan_sequence(const Tableau& t, std::size_t last_column);

/// The left key of `t`, via scanning.
Tableau left_key(const Tableau& t);

} // namespace tabkey

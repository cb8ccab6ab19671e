#pragma once

// Test-only reference implementations. None of these share code with the
// library routine they check.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "tabkey/jdt.hpp"
#include "tabkey/shape.hpp"
#include "tabkey/skew_tableau.hpp"
#include "tabkey/tableau.hpp"

namespace tabkey::testing {

/// Scanning tableau by the literal doubly recursive definition, copying
/// columns at every step.
Tableau recursive_scanning_tableau(const Tableau& t);

/// Number of tableaux of a shape with entries <= n, by dynamic programming
/// over the column sets, column by column.
std::uint64_t count_tableaux(const Shape& shape, int n);

/// Rectification by row-inserting the reading word (rows bottom to top,
/// each left to right).
Tableau insertion_rectify(const SkewTableau& u);

/// Random legal skew tableau with between 1 and max_boxes boxes.
SkewTableau random_skew_tableau(std::mt19937_64& rng, int max_boxes, int max_entry);

/// Cells just below a column whose addition leaves a legal skew diagram
/// and touches an existing box.
std::vector<Cell> outside_corners(const SkewTableau& u);

/// Offsets for columns of the given lengths, packed as tightly as a legal
/// skew diagram allows.
std::vector<int> tight_offsets(const std::vector<int>& lengths);
/// Offsets that leave no two boxes in the same row.
std::vector<int> separated_offsets(const std::vector<int>& lengths);

/// Every filling of the skew diagram (lengths, offsets) with entries <= n.
std::vector<SkewTableau> all_skew_fillings(const std::vector<int>& lengths,
                                           const std::vector<int>& offsets, int n);

/// Exhaustive uniqueness witness: for each tableau with at most
/// `max_boxes` boxes and entries <= n, and each distinct rearrangement of
/// its column lengths on the given diagram family, counts the skew
/// fillings that rectify to it. Returns the number of (tableau,
/// arrangement) pairs whose count is not exactly one; `pairs` receives the
/// number checked.
std::size_t uniqueness_exceptions(int max_boxes, int n, bool separated, std::size_t& pairs);

} // namespace tabkey::testing

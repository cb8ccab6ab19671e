#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabkey/skew_tableau.hpp"
#include "tabkey/tableau.hpp"

// Jeu de taquin on column-major skew tableaux, and the right/left keys
// computed from it. This is the slow reference route: keys come from
// length swaps on frank skew tableaux rather than from scanning.

namespace tabkey {

/// 0-based (column, row) position.
struct Cell {
    int column = 0;
    int row = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

class JdtError : public std::runtime_error {
public:
    enum class Kind { NotAnInsideCorner, NotAnOutsideCorner, IllegalShift, BadIndex };
    JdtError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

enum class SlideDirection { Forward, Reverse };

/// Cells visited by the hole, starting with the corner it entered at.
/// On ties the column neighbour moves in both directions.
struct SlideTrace {
    SlideDirection direction = SlideDirection::Forward;
    std::vector<Cell> path;

    Cell start() const { return path.front(); }
    Cell end() const { return path.back(); }
};

struct SlideResult {
    SkewTableau tableau;
    SlideTrace trace;
};

/// Jeu de taquin slide into the empty cell directly above column
/// `corner.column`. The cell must be an inside corner with a box below it
/// or to its right.
SlideResult forward_slide(const SkewTableau& u, Cell inside_corner);

/// Reverse slide from the empty cell directly below column
/// `corner.column`, which must have a box above it or to its left.
SlideResult reverse_slide(const SkewTableau& u, Cell outside_corner);

/// Cells of the removed region whose removal leaves a removable region,
/// left to right.
std::vector<Cell> inside_corners(const SkewTableau& u);

/// Chooses which of the available inside corners to slide next.
using CornerPicker = std::function<std::size_t(const std::vector<Cell>&)>;

/// Slides inside corners (leftmost first by default) until the shape is
/// straight.
Tableau rectify(const SkewTableau& u);
Tableau rectify(const SkewTableau& u, const CornerPicker& pick);

/// Moves columns [0, count) down `rows` rows by reverse slides beneath each
/// of them in turn. Throws IllegalShift if the slides do anything other
/// than a rigid shift.
SkewTableau pull_down_columns(const SkewTableau& u, std::size_t count, int rows);

/// Record of one length swap.
struct LengthSwapStep {
    std::size_t index = 0;  ///< swaps columns index and index+1 (0-based)
    int length_gap = 0;     ///< slides performed: len(index) - len(index+1)
    int attached = 0;       ///< rows shared by columns index-1 and index
    SkewTableau before;
    SkewTableau after;
};

/// Pulls columns [0, j) down by the number of rows column j-1 shares with
/// column j, then performs len(j) - len(j+1) reverse slides beneath column
/// j+1. The lengths of columns j and j+1 trade places.
SkewTableau length_swap(const SkewTableau& u, std::size_t j, LengthSwapStep* step = nullptr);

using SwapObserver = std::function<void(const LengthSwapStep&)>;

/// Column i (0-based) of the right key: the rightmost column after swapping
/// column i all the way to the right of t.
Column right_key_column_oracle(const Tableau& t, std::size_t i,
                               const SwapObserver& observer = {});

Tableau right_key_oracle(const Tableau& t, const SwapObserver& observer = {});

/// complement(right_key_oracle(complement(t))).
Tableau left_key_oracle(const Tableau& t);

/// Nonzero column lengths of `u` are a rearrangement of the column lengths
/// of its rectification.
bool verify_frank(const SkewTableau& u);

/// One line per record, for the CLI's explain mode and for debugging.
std::string format_trace(const SlideTrace& trace);
std::string format_trace(const LengthSwapStep& step);

} // namespace tabkey

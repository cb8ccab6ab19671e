#include "tabkey/jdt.hpp"

#include <algorithm>
#include <sstream>

namespace tabkey {

namespace {

constexpr Entry kHole = 0;

std::string cell_text(Cell c) {
    return "(" + std::to_string(c.column + 1) + "," + std::to_string(c.row + 1) + ")";
}

// The hole is stored as kHole inside a column so columns stay contiguous
// while it travels.
Entry& slot(std::vector<SkewColumn>& cols, int column, int row) {
    auto& col = cols[static_cast<std::size_t>(column)];
    return col.entries[static_cast<std::size_t>(row - col.offset)];
}

bool occupied(const std::vector<SkewColumn>& cols, int column, int row) {
    return column >= 0 && static_cast<std::size_t>(column) < cols.size() &&
           cols[static_cast<std::size_t>(column)].occupies(row);
}

// `allow_vacuous` lets rectification clear removed cells that have no
// neighbouring box; the public entry point rejects those.
SlideResult forward_slide_impl(const SkewTableau& u, Cell corner, bool allow_vacuous) {
    const int k = static_cast<int>(u.num_columns());
    const auto reject = [&](const char* why) {
        return JdtError(JdtError::Kind::NotAnInsideCorner,
                        "cell " + cell_text(corner) + " is not an inside corner: " + why);
    };
    if (corner.column < 0 || corner.column >= k) {
        throw reject("no such column");
    }
    const auto& target = u.column(static_cast<std::size_t>(corner.column));
    if (corner.row < 0 || corner.row != target.offset - 1) {
        throw reject("not directly above the column");
    }
    if (corner.column + 1 < k &&
        u.column(static_cast<std::size_t>(corner.column + 1)).offset > corner.row) {
        throw reject("the cell to its right is also empty");
    }
    const bool has_neighbour = u.is_box(corner.column, corner.row + 1) ||
                               u.is_box(corner.column + 1, corner.row);
    if (!has_neighbour && !allow_vacuous) {
        throw reject("nothing below or to the right");
    }

    auto cols = u.columns();
    SlideTrace trace{SlideDirection::Forward, {corner}};
    auto& start = cols[static_cast<std::size_t>(corner.column)];
    start.entries.insert(start.entries.begin(), kHole);
    start.offset -= 1;

    Cell hole = corner;
    while (true) {
        const bool below = occupied(cols, hole.column, hole.row + 1);
        const bool right = occupied(cols, hole.column + 1, hole.row);
        if (!below && !right) {
            break;
        }
        Cell from;
        if (below && right) {
            const Entry b = slot(cols, hole.column, hole.row + 1);
            const Entry r = slot(cols, hole.column + 1, hole.row);
            from = (b <= r) ? Cell{hole.column, hole.row + 1} : Cell{hole.column + 1, hole.row};
        } else if (below) {
            from = {hole.column, hole.row + 1};
        } else {
            from = {hole.column + 1, hole.row};
        }
        slot(cols, hole.column, hole.row) = slot(cols, from.column, from.row);
        slot(cols, from.column, from.row) = kHole;
        hole = from;
        trace.path.push_back(hole);
    }
    auto& last = cols[static_cast<std::size_t>(hole.column)];
    // Nothing below, so the hole is the last cell of its column.
    last.entries.pop_back();
    return {SkewTableau::unchecked(std::move(cols), u.entry_bound()), std::move(trace)};
}

} // namespace

SlideResult forward_slide(const SkewTableau& u, Cell inside_corner) {
    return forward_slide_impl(u, inside_corner, false);
}

SlideResult reverse_slide(const SkewTableau& u, Cell corner) {
    const int k = static_cast<int>(u.num_columns());
    const auto reject = [&](const char* why) {
        return JdtError(JdtError::Kind::NotAnOutsideCorner,
                        "cell " + cell_text(corner) + " is not an outside corner: " + why);
    };
    if (corner.column < 0 || corner.column >= k) {
        throw reject("no such column");
    }
    const auto& target = u.column(static_cast<std::size_t>(corner.column));
    if (corner.row != target.end_row()) {
        throw reject("not directly below the column");
    }
    if (!u.is_box(corner.column, corner.row - 1) && !u.is_box(corner.column - 1, corner.row)) {
        throw reject("nothing above or to the left");
    }

    auto cols = u.columns();
    SlideTrace trace{SlideDirection::Reverse, {corner}};
    cols[static_cast<std::size_t>(corner.column)].entries.push_back(kHole);

    Cell hole = corner;
    while (true) {
        const bool above = occupied(cols, hole.column, hole.row - 1);
        const bool left = occupied(cols, hole.column - 1, hole.row);
        if (!above && !left) {
            break;
        }
        Cell from;
        if (above && left) {
            const Entry a = slot(cols, hole.column, hole.row - 1);
            const Entry l = slot(cols, hole.column - 1, hole.row);
            from = (a >= l) ? Cell{hole.column, hole.row - 1} : Cell{hole.column - 1, hole.row};
        } else if (above) {
            from = {hole.column, hole.row - 1};
        } else {
            from = {hole.column - 1, hole.row};
        }
        slot(cols, hole.column, hole.row) = slot(cols, from.column, from.row);
        slot(cols, from.column, from.row) = kHole;
        hole = from;
        trace.path.push_back(hole);
    }
    auto& first = cols[static_cast<std::size_t>(hole.column)];
    first.entries.erase(first.entries.begin());
    first.offset += 1;
    return {SkewTableau::unchecked(std::move(cols), u.entry_bound()), std::move(trace)};
}

std::vector<Cell> inside_corners(const SkewTableau& u) {
    std::vector<Cell> out;
    const std::size_t k = u.num_columns();
    for (std::size_t c = 0; c < k; ++c) {
        const int offset = u.column(c).offset;
        if (offset == 0) {
            continue;
        }
        if (c + 1 < k && u.column(c + 1).offset > offset - 1) {
            continue;
        }
        out.push_back({static_cast<int>(c), offset - 1});
    }
    return out;
}

Tableau rectify(const SkewTableau& u) {
    return rectify(u, [](const std::vector<Cell>&) { return std::size_t{0}; });
}

Tableau rectify(const SkewTableau& u, const CornerPicker& pick) {
    SkewTableau current = u;
    while (true) {
        const auto corners = inside_corners(current);
        if (corners.empty()) {
            break;
        }
        const std::size_t choice = pick(corners);
        current = forward_slide_impl(current, corners.at(choice), true).tableau;
    }
    return current.to_tableau();
}

SkewTableau pull_down_columns(const SkewTableau& u, std::size_t count, int rows) {
    if (rows < 0 || count > u.num_columns()) {
        throw JdtError(JdtError::Kind::IllegalShift,
                       "cannot shift " + std::to_string(count) + " columns down " +
                           std::to_string(rows) + " rows");
    }
    SkewTableau current = u;
    for (std::size_t j = 0; j < count; ++j) {
        const int column = static_cast<int>(j);
        if (current.column(j).entries.empty()) {
            auto cols = current.columns();
            cols[j].offset += rows;
            current = SkewTableau::unchecked(std::move(cols), current.entry_bound());
            continue;
        }
        for (int step = 0; step < rows; ++step) {
            try {
                current = reverse_slide(current, {column, current.column(j).end_row()}).tableau;
            } catch (const JdtError& e) {
                throw JdtError(JdtError::Kind::IllegalShift, e.what());
            }
        }
    }

    auto expected = u.columns();
    for (std::size_t j = 0; j < count; ++j) {
        expected[j].offset += rows;
    }
    if (current.columns() != expected) {
        throw JdtError(JdtError::Kind::IllegalShift,
                       "reverse slides did not shift the columns rigidly:\n" + u.to_string());
    }
    return current;
}

SkewTableau length_swap(const SkewTableau& u, std::size_t j, LengthSwapStep* step) {
    if (j + 1 >= u.num_columns()) {
        throw JdtError(JdtError::Kind::BadIndex,
                       "length swap " + std::to_string(j + 1) + " needs columns " +
                           std::to_string(j + 1) + " and " + std::to_string(j + 2));
    }
    const auto& moving = u.column(j);
    const auto& next = u.column(j + 1);
    const int gap = moving.length() - next.length();
    if (gap < 0) {
        throw JdtError(JdtError::Kind::BadIndex,
                       "length swap " + std::to_string(j + 1) +
                           ": left column is shorter than its neighbour");
    }
    int attached = 0;
    if (j > 0) {
        const auto& left = u.column(j - 1);
        attached = std::max(0, std::min(left.end_row(), moving.end_row()) -
                                   std::max(left.offset, moving.offset));
    }

    SkewTableau current = pull_down_columns(u, j, attached);
    const int column = static_cast<int>(j + 1);
    for (int s = 0; s < gap; ++s) {
        current = reverse_slide(current, {column, current.column(j + 1).end_row()}).tableau;
    }

    auto expected = u.lengths();
    std::swap(expected[j], expected[j + 1]);
    if (current.lengths() != expected) {
        throw std::logic_error("length swap " + std::to_string(j + 1) +
                               " did not exchange column lengths:\n" + u.to_string());
    }
    if (step != nullptr) {
        *step = LengthSwapStep{j, gap, attached, u, current};
    }
    return current;
}

Column right_key_column_oracle(const Tableau& t, std::size_t i, const SwapObserver& observer) {
    if (i >= t.num_columns()) {
        throw JdtError(JdtError::Kind::BadIndex, "no column " + std::to_string(i + 1));
    }
    SkewTableau current(t);
    for (std::size_t j = i; j + 1 < t.num_columns(); ++j) {
        if (observer) {
            LengthSwapStep step;
            current = length_swap(current, j, &step);
            observer(step);
        } else {
            current = length_swap(current, j);
        }
    }
    return current.columns().back().entries;
}

Tableau right_key_oracle(const Tableau& t, const SwapObserver& observer) {
    std::vector<Column> columns;
    columns.reserve(t.num_columns());
    for (std::size_t i = 0; i < t.num_columns(); ++i) {
        columns.push_back(right_key_column_oracle(t, i, observer));
    }
    return Tableau(std::move(columns), t.entry_bound());
}

Tableau left_key_oracle(const Tableau& t) {
    return complement(right_key_oracle(complement(t)));
}

bool verify_frank(const SkewTableau& u) {
    std::vector<int> lengths;
    for (int length : u.lengths()) {
        if (length > 0) {
            lengths.push_back(length);
        }
    }
    auto rectified = rectify(u).shape().column_lengths();
    std::sort(lengths.begin(), lengths.end());
    std::sort(rectified.begin(), rectified.end());
    return lengths == rectified;
}

std::string format_trace(const SlideTrace& trace) {
    std::ostringstream out;
    out << (trace.direction == SlideDirection::Forward ? "slide" : "reverse-slide");
    for (const auto& cell : trace.path) {
        out << ' ' << cell_text(cell);
    }
    return out.str();
}

std::string format_trace(const LengthSwapStep& step) {
    std::ostringstream out;
    const auto join = [&out](const std::vector<int>& values) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << (i ? "," : "") << values[i];
        }
    };
    out << "swap " << step.index + 1 << " slides=" << step.length_gap
        << " attached=" << step.attached << " lengths=";
    join(step.before.lengths());
    out << " -> ";
    join(step.after.lengths());
    out << " offsets=";
    join(step.after.offsets());
    return out.str();
}

} // namespace tabkey

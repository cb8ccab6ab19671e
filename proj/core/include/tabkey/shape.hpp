#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tabkey {

/// A Young diagram described by its column lengths, left to right.
///
/// Lengths are positive and weakly decreasing. The empty shape (no columns)
/// is allowed. Use from_rows()/row_lengths() to convert to and from the
/// row-length convention used for partitions.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> column_lengths);
    Shape(std::initializer_list<int> column_lengths)
        : Shape(std::vector<int>(column_lengths)) {}

    /// Builds a shape from a partition given by row lengths.
    static Shape from_rows(const std::vector<int>& row_lengths);

    const std::vector<int>& column_lengths() const noexcept { return lengths_; }
    std::vector<int> row_lengths() const;

    std::size_t num_columns() const noexcept { return lengths_.size(); }
    int num_rows() const noexcept { return lengths_.empty() ? 0 : lengths_.front(); }
    int num_boxes() const noexcept;
    bool empty() const noexcept { return lengths_.empty(); }
    int operator[](std::size_t column) const { return lengths_[column]; }

    std::string to_string() const;

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> lengths_;
};

/// Conjugate of a partition (rows <-> columns).
std::vector<int> conjugate(const std::vector<int>& partition);

/// Every shape with exactly `boxes` boxes, as column lengths, in
/// reverse lexicographic order of the column-length vector.
std::vector<Shape> shapes_of_size(int boxes);

/// Every shape with at most `max_boxes` boxes (including the empty shape),
/// ordered by size and then as in shapes_of_size().
std::vector<Shape> shapes_up_to(int max_boxes);

} // namespace tabkey

#include "tabkey/shape.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tabkey {

Shape::Shape(std::vector<int> column_lengths) : lengths_(std::move(column_lengths)) {
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (lengths_[i] < 1) {
            throw std::invalid_argument("shape: column lengths must be positive");
        }
        if (i > 0 && lengths_[i] > lengths_[i - 1]) {
            throw std::invalid_argument("shape: column lengths must be weakly decreasing");
        }
    }
}

Shape Shape::from_rows(const std::vector<int>& row_lengths) {
    std::vector<int> rows;
    for (std::size_t i = 0; i < row_lengths.size(); ++i) {
        if (row_lengths[i] < 0 || (i > 0 && row_lengths[i] > row_lengths[i - 1])) {
            throw std::invalid_argument("shape: row lengths must form a partition");
        }
        if (row_lengths[i] > 0) {
            rows.push_back(row_lengths[i]);
        }
    }
    return Shape(conjugate(rows));
}

std::vector<int> Shape::row_lengths() const { return conjugate(lengths_); }

int Shape::num_boxes() const noexcept {
    return std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

std::string Shape::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(lengths_[i]);
    }
    return out + ")";
}

std::vector<int> conjugate(const std::vector<int>& partition) {
    std::vector<int> out;
    if (partition.empty()) {
        return out;
    }
    const int width = *std::max_element(partition.begin(), partition.end());
    for (int j = 1; j <= width; ++j) {
        const auto count = std::count_if(partition.begin(), partition.end(),
                                         [j](int part) { return part >= j; });
        out.push_back(static_cast<int>(count));
    }
    return out;
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Shape>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Shape> shapes_of_size(int boxes) {
    std::vector<Shape> out;
    std::vector<int> prefix;
    if (boxes >= 0) {
        partitions_into(boxes, boxes, prefix, out);
    }
    return out;
}

std::vector<Shape> shapes_up_to(int max_boxes) {
    std::vector<Shape> out;
    for (int m = 0; m <= max_boxes; ++m) {
        auto level = shapes_of_size(m);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace tabkey

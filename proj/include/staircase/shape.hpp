#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace staircase {

// Cell (i,j): row i, column j, both 1-based.
struct Cell {
    std::int64_t row = 0;
    std::int64_t col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

// Column diagram with non-decreasing column lengths n_1 <= ... <= n_m.
// validate() enforces positive lengths (the public contract); shapes produced
// by hook erasure may carry zero-length columns, which hold no cells.
class StaircaseShape {
public:
    StaircaseShape() = default;

    static StaircaseShape validate(const std::vector<std::int64_t>& columns);
    // Accepts zero-length columns; still requires non-decreasing, >= 0.
    static StaircaseShape allow_empty_columns(std::vector<std::int64_t> columns);

    const std::vector<std::int64_t>& columns() const { return columns_; }
    std::size_t num_columns() const { return columns_.size(); }              // m
    std::int64_t column_length(std::size_t j) const;                        // n_j
    std::int64_t num_rows() const { return columns_.empty() ? 0 : columns_.back(); }  // n_m
    std::int64_t cell_count() const;

    bool contains(const Cell& c) const;
    std::vector<Cell> cells() const;  // column-major order
    std::int64_t row_length(std::int64_t i) const;  // #{j : n_j >= i}

    StaircaseShape transpose() const;

    std::string to_string() const;

    friend bool operator==(const StaircaseShape&, const StaircaseShape&) = default;
    friend auto operator<=>(const StaircaseShape&, const StaircaseShape&) = default;

private:
    std::vector<std::int64_t> columns_;
};

// Shape parsed from a comma-separated list such as "2,4,4,4,5,5".
StaircaseShape parse_shape(const std::string& text);

struct ErasedShape {
    StaircaseShape shape;
    // Surviving cell of the original diagram -> its cell in the erased diagram.
    std::map<Cell, Cell> relabel;
};

// Erase the row and column through c: three-case column formula plus the
// relabeling bijection on the remaining cells.
ErasedShape erase_hook(const StaircaseShape& s, const Cell& c);

}  // namespace staircase

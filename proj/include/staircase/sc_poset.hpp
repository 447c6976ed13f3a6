#pragma once

#include <utility>
#include <vector>

#include "staircase/shape.hpp"

namespace staircase {

// The staircase-corner set of a shape with its down-left partial order:
// (i,j) >= (i',j')  iff  i >= i' and j <= j'.
class ScPoset {
public:
    ScPoset(StaircaseShape shape, std::vector<Cell> corners);

    const StaircaseShape& shape() const { return shape_; }
    const std::vector<Cell>& corners() const { return corners_; }  // sorted by column
    std::size_t size() const { return corners_.size(); }

    bool is_corner(const Cell& c) const;
    // a <= b in the down-left order; both must be corners.
    bool le(const Cell& a, const Cell& b) const;

    // Covering pairs, each listed as (greater, lesser), sorted.
    std::vector<std::pair<Cell, Cell>> hasse_edges() const;

    // Column of the corner in row i, or 0 when the row holds no corner.
    std::int64_t corner_column_in_row(std::int64_t i) const;
    // Row of the corner in column j, or 0 when the column holds no corner.
    std::int64_t corner_row_in_column(std::int64_t j) const;

private:
    StaircaseShape shape_;
    std::vector<Cell> corners_;
};

// Iterated corner removal: take every corner of the current residual diagram,
// record it, delete the corresponding rows and columns, repeat until empty.
ScPoset staircase_corners(const StaircaseShape& s);

}  // namespace staircase

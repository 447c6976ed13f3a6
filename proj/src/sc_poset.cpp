#include "staircase/sc_poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

ScPoset::ScPoset(StaircaseShape shape, std::vector<Cell> corners)
    : shape_(std::move(shape)), corners_(std::move(corners)) {
    std::sort(corners_.begin(), corners_.end(),
              [](const Cell& a, const Cell& b) { return a.col < b.col; });
}

bool ScPoset::is_corner(const Cell& c) const {
    return std::find(corners_.begin(), corners_.end(), c) != corners_.end();
}

bool ScPoset::le(const Cell& a, const Cell& b) const {
    if (!is_corner(a) || !is_corner(b))
        throw std::invalid_argument("cell is not a staircase corner");
    return b.row >= a.row && b.col <= a.col;
}

std::vector<std::pair<Cell, Cell>> ScPoset::hasse_edges() const {
    std::vector<std::pair<Cell, Cell>> edges;
    for (const Cell& hi : corners_) {
        for (const Cell& lo : corners_) {
            if (lo == hi || !le(lo, hi)) continue;
            bool covered = false;
            for (const Cell& mid : corners_) {
                if (mid == hi || mid == lo) continue;
                if (le(lo, mid) && le(mid, hi)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) edges.emplace_back(hi, lo);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::int64_t ScPoset::corner_column_in_row(std::int64_t i) const {
    for (const Cell& c : corners_)
        if (c.row == i) return c.col;
    return 0;
}

std::int64_t ScPoset::corner_row_in_column(std::int64_t j) const {
    for (const Cell& c : corners_)
        if (c.col == j) return c.row;
    return 0;
}

ScPoset staircase_corners(const StaircaseShape& s) {
    std::vector<Cell> corners;
    std::vector<std::int64_t> rows;  // surviving rows, ascending
    for (std::int64_t i = 1; i <= s.num_rows(); ++i) rows.push_back(i);
    std::vector<std::size_t> cols;  // surviving columns (original labels)
    for (std::size_t j = 1; j <= s.num_columns(); ++j) cols.push_back(j);

    while (!cols.empty()) {
        // Residual column length = surviving rows within the original length.
        std::vector<std::int64_t> len(cols.size());
        for (std::size_t t = 0; t < cols.size(); ++t) {
            const std::int64_t nj = s.column_length(cols[t]);
            len[t] = static_cast<std::int64_t>(
                std::upper_bound(rows.begin(), rows.end(), nj) - rows.begin());
        }
        std::vector<std::size_t> batch_cols;
        std::vector<std::int64_t> batch_rows;
        std::int64_t prev = 0;
        for (std::size_t t = 0; t < cols.size(); ++t) {
            if (len[t] > prev) {
                // Corner of the residual diagram, in original coordinates.
                const std::int64_t nj = s.column_length(cols[t]);
                auto it = std::upper_bound(rows.begin(), rows.end(), nj);
                batch_cols.push_back(cols[t]);
                batch_rows.push_back(*std::prev(it));
            }
            prev = len[t];
        }
        if (batch_cols.empty()) break;  // only empty columns remain
        for (std::size_t t = 0; t < batch_cols.size(); ++t)
            corners.push_back({batch_rows[t], static_cast<std::int64_t>(batch_cols[t])});
        for (std::int64_t r : batch_rows)
            rows.erase(std::remove(rows.begin(), rows.end(), r), rows.end());
        for (std::size_t cj : batch_cols)
            cols.erase(std::remove(cols.begin(), cols.end(), cj), cols.end());
    }
    return ScPoset(s, std::move(corners));
}

}  // namespace staircase

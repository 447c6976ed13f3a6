#include "staircase/shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace staircase {

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

StaircaseShape StaircaseShape::validate(const std::vector<std::int64_t>& columns) {
    if (columns.empty()) throw std::invalid_argument("shape needs at least one column");
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] <= 0)
            throw std::invalid_argument("column lengths must be positive");
        if (j > 0 && columns[j] < columns[j - 1])
            throw std::invalid_argument("column lengths must be non-decreasing");
    }
    StaircaseShape s;
    s.columns_ = columns;
    return s;
}

StaircaseShape StaircaseShape::allow_empty_columns(std::vector<std::int64_t> columns) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j] < 0) throw std::invalid_argument("column lengths must be >= 0");
        if (j > 0 && columns[j] < columns[j - 1])
            throw std::invalid_argument("column lengths must be non-decreasing");
    }
    StaircaseShape s;
    s.columns_ = std::move(columns);
    return s;
}

std::int64_t StaircaseShape::column_length(std::size_t j) const {
    if (j < 1 || j > columns_.size()) throw std::out_of_range("column index out of range");
    return columns_[j - 1];
}

std::int64_t StaircaseShape::cell_count() const {
    return std::accumulate(columns_.begin(), columns_.end(), std::int64_t{0});
}

bool StaircaseShape::contains(const Cell& c) const {
    return c.col >= 1 && c.col <= static_cast<std::int64_t>(columns_.size()) && c.row >= 1 &&
           c.row <= columns_[static_cast<std::size_t>(c.col) - 1];
}

std::vector<Cell> StaircaseShape::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (std::size_t j = 1; j <= columns_.size(); ++j)
        for (std::int64_t i = 1; i <= columns_[j - 1]; ++i)
            out.push_back({i, static_cast<std::int64_t>(j)});
    return out;
}

std::int64_t StaircaseShape::row_length(std::int64_t i) const {
    std::int64_t count = 0;
    for (auto n : columns_)
        if (n >= i) ++count;
    return count;
}

StaircaseShape StaircaseShape::transpose() const {
    // Row lengths listed in non-decreasing order: the k-th transposed column
    // counts the columns of length >= n_m + 1 - k.
    const std::int64_t tall = num_rows();
    std::vector<std::int64_t> cols;
    cols.reserve(static_cast<std::size_t>(tall));
    for (std::int64_t k = 1; k <= tall; ++k) cols.push_back(row_length(tall + 1 - k));
    return allow_empty_columns(std::move(cols));
}

std::string StaircaseShape::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (j) os << ',';
        os << columns_[j];
    }
    os << ')';
    return os.str();
}

StaircaseShape parse_shape(const std::string& text) {
    std::vector<std::int64_t> cols;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad shape entry: '" + item + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("bad shape entry: '" + item + "'");
        cols.push_back(v);
    }
    return StaircaseShape::validate(cols);
}

ErasedShape erase_hook(const StaircaseShape& s, const Cell& c) {
    if (!s.contains(c)) throw std::invalid_argument("cell " + to_string(c) + " not in diagram");
    const auto& n = s.columns();
    const std::size_t m = n.size();
    const std::size_t j = static_cast<std::size_t>(c.col);
    const std::int64_t i = c.row;

    std::vector<std::int64_t> erased;
    erased.reserve(m - 1);
    for (std::size_t k = 1; k <= m - 1; ++k) {
        if (k < j)
            erased.push_back(n[k - 1] < i ? n[k - 1] : n[k - 1] - 1);
        else
            erased.push_back(n[k] - 1);
    }

    ErasedShape out;
    out.shape = StaircaseShape::allow_empty_columns(std::move(erased));
    for (const Cell& cell : s.cells()) {
        if (cell.row == i || cell.col == c.col) continue;
        Cell target{cell.row < i ? cell.row : cell.row - 1,
                    cell.col < c.col ? cell.col : cell.col - 1};
        out.relabel.emplace(cell, target);
    }
    return out;
}

}  // namespace staircase

#include "staircase/arrays.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

std::int64_t ShapeArray::at(const Cell& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
}

void ShapeArray::set(const Cell& c, std::int64_t value) {
    if (!shape_.contains(c))
        throw std::invalid_argument("cell " + to_string(c) + " outside the diagram");
    if (value < 0) throw std::invalid_argument("array entries must be >= 0");
    if (value == 0)
        entries_.erase(c);
    else
        entries_[c] = value;
}

std::int64_t ShapeArray::degree() const {
    std::int64_t total = 0;
    for (const auto& [cell, v] : entries_) total += v;
    return total;
}

Composition ShapeArray::hor() const {
    std::vector<std::int64_t> sums(static_cast<std::size_t>(shape_.num_rows()), 0);
    for (const auto& [cell, v] : entries_) sums[static_cast<std::size_t>(cell.row) - 1] += v;
    return Composition(std::move(sums));
}

Composition ShapeArray::vrt() const {
    std::vector<std::int64_t> sums(shape_.num_columns(), 0);
    for (const auto& [cell, v] : entries_) sums[static_cast<std::size_t>(cell.col) - 1] += v;
    return Composition(std::move(sums));
}

bool is_dl_dense(const ShapeArray& a, const ScPoset& poset) {
    for (const auto& [cell, v] : a.entries())
        if (v != 0 && !poset.is_corner(cell)) return false;
    const auto& corners = poset.corners();
    for (const Cell& p : corners)
        for (const Cell& q : corners)
            if (p != q && poset.le(p, q) && a.at(p) > a.at(q)) return false;
    return true;
}

namespace {

// Assign values to corners in column order (a reverse linear extension: every
// strictly greater corner sits in an earlier column), so the only constraint
// at each step is an upper bound from already assigned corners.
template <typename PickValues>
std::vector<ShapeArray> enumerate_monotone(const StaircaseShape& s, const ScPoset& poset,
                                           std::int64_t total, PickValues&& pick) {
    const auto& corners = poset.corners();
    std::vector<ShapeArray> out;
    std::vector<std::int64_t> assigned(corners.size(), 0);

    auto rec = [&](auto&& self, std::size_t pos, std::int64_t rest) -> void {
        if (pos == corners.size()) {
            if (rest == 0) {
                ShapeArray a(s);
                for (std::size_t k = 0; k < corners.size(); ++k) a.set(corners[k], assigned[k]);
                out.push_back(std::move(a));
            }
            return;
        }
        std::int64_t ub = rest;
        for (std::size_t k = 0; k < pos; ++k)
            if (poset.le(corners[pos], corners[k])) ub = std::min(ub, assigned[k]);
        pick(pos, ub, [&](std::int64_t v) {
            assigned[pos] = v;
            self(self, pos + 1, rest - v);
        });
    };
    rec(rec, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ShapeArray> enumerate_dl(const StaircaseShape& s, std::int64_t N) {
    if (N < 0) throw std::invalid_argument("enumerate_dl: negative degree");
    const ScPoset poset = staircase_corners(s);
    return enumerate_monotone(s, poset, N,
                              [](std::size_t, std::int64_t ub, auto&& emit) {
                                  for (std::int64_t v = 0; v <= ub; ++v) emit(v);
                              });
}

DLPoset::DLPoset(const StaircaseShape& s, const Partition& lambda, BruhatSense sense)
    : shape_(s), lambda_(lambda), sense_(sense) {
    const ScPoset poset = staircase_corners(s);
    if (lambda.length() > poset.size())
        throw std::invalid_argument("partition has more parts than staircase corners");

    std::vector<std::int64_t> values = lambda.parts();
    values.resize(poset.size(), 0);
    std::sort(values.begin(), values.end());

    // Multiset-constrained monotone fillings: branch on distinct leftover values.
    std::vector<std::int64_t> pool = values;
    const std::int64_t total = lambda.weight();
    const auto& corners = poset.corners();
    std::vector<std::int64_t> assigned(corners.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == corners.size()) {
            ShapeArray a(shape_);
            for (std::size_t k = 0; k < corners.size(); ++k) a.set(corners[k], assigned[k]);
            elements_.push_back(std::move(a));
            return;
        }
        std::int64_t ub = total;
        for (std::size_t k = 0; k < pos; ++k)
            if (poset.le(corners[pos], corners[k])) ub = std::min(ub, assigned[k]);
        std::int64_t last = -1;
        for (std::size_t t = 0; t < pool.size(); ++t) {
            const std::int64_t v = pool[t];
            if (v == last || v > ub) continue;
            last = v;
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(t));
            assigned[pos] = v;
            self(self, pos + 1);
            pool.insert(pool.begin() + static_cast<std::ptrdiff_t>(t), v);
        }
    };
    rec(rec, 0);
    std::sort(elements_.begin(), elements_.end());

    const std::size_t m = shape_.num_columns();
    le_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
    for (std::size_t b = 0; b < elements_.size(); ++b)
        for (std::size_t a = 0; a < elements_.size(); ++a)
            le_[b][a] = cherednik_le(elements_[b].vrt(), elements_[a].vrt(), m, sense_);
}

std::size_t DLPoset::index_of(const ShapeArray& a) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
    if (it == elements_.end() || !(*it == a))
        throw std::invalid_argument("array is not an element of the poset");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool DLPoset::le(const ShapeArray& b, const ShapeArray& a) const {
    return le_[index_of(b)][index_of(a)];
}

std::int64_t DLPoset::mobius(std::size_t b, std::size_t a) const {
    if (!le_[b][a]) throw std::invalid_argument("mobius on an incomparable pair");
    if (b == a) return 1;
    auto key = std::make_pair(b, a);
    auto it = mobius_cache_.find(key);
    if (it != mobius_cache_.end()) return it->second;
    // sum_{b <= c <= a} mu(c, a) = 0 for b < a.
    std::int64_t total = 0;
    for (std::size_t c = 0; c < elements_.size(); ++c)
        if (c != b && le_[b][c] && le_[c][a]) total += mobius(c, a);
    const std::int64_t value = -total;
    mobius_cache_.emplace(key, value);
    return value;
}

std::int64_t DLPoset::mobius(const ShapeArray& b, const ShapeArray& a) const {
    return mobius(index_of(b), index_of(a));
}

std::vector<std::pair<std::size_t, std::size_t>> DLPoset::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        for (std::size_t b = 0; b < elements_.size(); ++b) {
            if (a == b || !le_[b][a]) continue;
            bool covered = false;
            for (std::size_t c = 0; c < elements_.size(); ++c) {
                if (c == a || c == b) continue;
                if (le_[b][c] && le_[c][a]) {
                    covered = true;
                    break;
                }
            }
            if (!covered) edges.emplace_back(a, b);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace staircase

#include "staircase/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace staircase {

namespace {

void strip_trailing_zeros(std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void check_nonnegative(const std::vector<std::int64_t>& v) {
    for (auto e : v)
        if (e < 0) throw std::invalid_argument("composition entries must be >= 0");
}

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

Composition::Composition(std::initializer_list<std::int64_t> parts)
    : Composition(std::vector<std::int64_t>(parts)) {}

Composition::Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    check_nonnegative(parts_);
    strip_trailing_zeros(parts_);
}

std::int64_t Composition::at(std::size_t i) const {
    if (i == 0) throw std::out_of_range("composition positions are 1-based");
    return i <= parts_.size() ? parts_[i - 1] : 0;
}

std::vector<std::int64_t> Composition::padded(std::size_t n) const {
    if (n < parts_.size())
        throw std::invalid_argument("cannot pad " + to_string() + " to length " +
                                    std::to_string(n));
    std::vector<std::int64_t> out(parts_);
    out.resize(n, 0);
    return out;
}

std::int64_t Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::size_t Composition::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(parts_.begin(), parts_.end(), [](std::int64_t e) { return e != 0; }));
}

std::string Composition::to_string() const { return join(parts_); }

Partition::Partition(std::initializer_list<std::int64_t> parts)
    : Partition(std::vector<std::int64_t>(parts)) {}

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    check_nonnegative(parts_);
    if (!std::is_sorted(parts_.rbegin(), parts_.rend()))
        throw std::invalid_argument("partition entries must be non-increasing");
    strip_trailing_zeros(parts_);
}

std::int64_t Partition::at(std::size_t i) const {
    if (i == 0) throw std::out_of_range("partition positions are 1-based");
    return i <= parts_.size() ? parts_[i - 1] : 0;
}

std::int64_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const { return join(parts_); }

Partition dominant_part(const Composition& c) {
    std::vector<std::int64_t> v(c.parts());
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

bool dominance_le(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return false;
    std::int64_t pa = 0, pb = 0;
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 1; i <= n; ++i) {
        pa += a.at(i);
        pb += b.at(i);
        if (pb < pa) return false;
    }
    return true;
}

std::int64_t weight(const Composition& c) { return c.weight(); }

std::vector<Partition> partitions_of(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t rest, std::int64_t cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t p = std::min(cap, rest); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

void for_each_composition(std::int64_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (total < 0) throw std::invalid_argument("for_each_composition: negative total");
    if (parts == 0) {
        if (total == 0) fn({});
        return;
    }
    std::vector<std::int64_t> cur(parts, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t rest) -> void {
        if (pos + 1 == parts) {
            cur[pos] = rest;
            fn(cur);
            return;
        }
        for (std::int64_t v = rest; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, total);
}

}  // namespace staircase

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace staircase {

// Finite vector of non-negative integers. Two compositions differing only by
// trailing zeros are the same value; the canonical stored form strips them.
// Anything that needs a fixed length asks for it explicitly via padded().
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<std::int64_t> parts);
    explicit Composition(std::vector<std::int64_t> parts);

    // Entry at 1-based position i; zero beyond the stored length.
    std::int64_t at(std::size_t i) const;

    // Canonical parts, trailing zeros stripped.
    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t canonical_size() const { return parts_.size(); }

    std::vector<std::int64_t> padded(std::size_t n) const;

    std::int64_t weight() const;
    std::size_t nonzero_count() const;

    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) = default;
    // Lexicographic on the canonical form; a deterministic total order for maps.
    friend auto operator<=>(const Composition& a, const Composition& b) = default;

private:
    std::vector<std::int64_t> parts_;
};

// Non-increasing composition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<std::int64_t> parts);
    explicit Partition(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t at(std::size_t i) const;
    std::int64_t weight() const;
    std::size_t length() const { return parts_.size(); }

    Composition as_composition() const { return Composition(parts_); }
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<std::int64_t> parts_;
};

// Non-increasing reordering of the entries.
Partition dominant_part(const Composition& c);

// a <= b in dominance: equal weight and every prefix sum of b dominates.
bool dominance_le(const Partition& a, const Partition& b);

std::int64_t weight(const Composition& c);

// All partitions of n (any number of parts), lexicographically decreasing.
std::vector<Partition> partitions_of(std::int64_t n);

// Calls fn(parts) for every vector of `parts` non-negative entries summing to
// total, in lexicographically decreasing order.
void for_each_composition(std::int64_t total, std::size_t parts,
                          const std::function<void(const std::vector<std::int64_t>&)>& fn);

}  // namespace staircase

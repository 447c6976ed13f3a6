#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "staircase/cherednik.hpp"
#include "staircase/composition.hpp"
#include "staircase/sc_poset.hpp"
#include "staircase/shape.hpp"

namespace staircase {

// Non-negative integer filling of the diagram cells; only nonzero entries are
// stored.
class ShapeArray {
public:
    explicit ShapeArray(StaircaseShape shape) : shape_(std::move(shape)) {}

    const StaircaseShape& shape() const { return shape_; }
    const std::map<Cell, std::int64_t>& entries() const { return entries_; }

    std::int64_t at(const Cell& c) const;
    void set(const Cell& c, std::int64_t value);

    std::int64_t degree() const;
    Composition hor() const;  // row sums, length n_m
    Composition vrt() const;  // column sums, length m

    friend bool operator==(const ShapeArray&, const ShapeArray&) = default;
    friend auto operator<=>(const ShapeArray&, const ShapeArray&) = default;

private:
    StaircaseShape shape_;
    std::map<Cell, std::int64_t> entries_;
};

// Array supported on the staircase corners and order-preserving for the
// down-left order.
bool is_dl_dense(const ShapeArray& a, const ScPoset& poset);

// All DL-dense arrays of total degree N, deterministically ordered.
std::vector<ShapeArray> enumerate_dl(const StaircaseShape& s, std::int64_t N);

// DL-dense arrays whose entry multiset equals lambda, ordered as a poset by
// the Cherednik comparison of vertical weights. The Bruhat tie-break sense is
// selectable; `reversed` is the containment order of the right-hand
// characters and is the orientation the alternating identity validates.
class DLPoset {
public:
    DLPoset(const StaircaseShape& s, const Partition& lambda,
            BruhatSense sense = BruhatSense::reversed);

    const StaircaseShape& shape() const { return shape_; }
    const Partition& entry_multiset() const { return lambda_; }
    BruhatSense sense() const { return sense_; }

    const std::vector<ShapeArray>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    std::size_t index_of(const ShapeArray& a) const;
    bool le(std::size_t b, std::size_t a) const { return le_[b][a]; }  // b <= a
    bool le(const ShapeArray& b, const ShapeArray& a) const;

    // Standard Mobius function mu(b, a) for b <= a; throws on incomparable.
    std::int64_t mobius(std::size_t b, std::size_t a) const;
    std::int64_t mobius(const ShapeArray& b, const ShapeArray& a) const;

    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;  // (greater, lesser)

private:
    StaircaseShape shape_;
    Partition lambda_;
    BruhatSense sense_;
    std::vector<ShapeArray> elements_;
    std::vector<std::vector<bool>> le_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::int64_t> mobius_cache_;
};

}  // namespace staircase

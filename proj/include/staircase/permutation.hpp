#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "staircase/composition.hpp"

namespace staircase {

// Element of the symmetric group S_n in one-line notation (1-based values).
class Permutation {
public:
    explicit Permutation(std::size_t n);  // identity
    explicit Permutation(std::vector<int> one_line);

    static Permutation simple_reflection(int i, std::size_t n);  // s_i, 1 <= i < n

    std::size_t size() const { return line_.size(); }
    int operator()(int i) const { return line_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return line_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;  // (a*b)(i) = a(b(i))

    bool is_identity() const;
    std::size_t inversions() const;  // Coxeter length

    // Entry permutation: (sigma . v)_i = v_{sigma^{-1}(i)}.
    std::vector<std::int64_t> act(const std::vector<std::int64_t>& v) const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    std::string to_string() const;

private:
    std::vector<int> line_;
};

// Unique minimal-length sigma with sigma(dominant_part(c)) = c, where c is
// read at length n. Realized by a stable descending sort of the entries.
Permutation min_coset_rep(const Composition& c, std::size_t n);

// Bruhat order via the rank-matrix criterion:
// u <= v  iff  #{a<=i : u(a)>=j} <= #{a<=i : v(a)>=j} for all i,j.
bool bruhat_le(const Permutation& u, const Permutation& v);

// Word (i_1,...,i_k) with s_{i_1}...s_{i_k} = u and k = inversions(u).
std::vector<int> reduced_word(const Permutation& u);

// Entry-reversed composition at length n: (c_n,...,c_1).
Composition w0_reverse(const Composition& c, std::size_t n);

std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace staircase

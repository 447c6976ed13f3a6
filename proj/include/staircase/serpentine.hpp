#pragma once

#include <optional>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/shape.hpp"

namespace staircase {

// All compositions mu of length n with
//   mu_i >= lambda_i,  sum(mu - lambda) = d,
//   i<j & lambda_i <= lambda_j  =>  mu_i <= lambda_j,
//   i<j & lambda_j < lambda_i <= mu_j  =>  mu_i = lambda_i.
// Returned in lexicographic order.
std::vector<Composition> serpentines(const Composition& lambda, std::int64_t d, std::size_t n);

// The unique member of serpentines(lambda, d, n) whose dominant part equals
// dominant_part((lambda, d)); absent when lambda has no zero entry within n
// (and d > 0). Computed by the index recursion, not by enumeration.
std::optional<Composition> sorted_serpentine(const Composition& lambda, std::int64_t d,
                                             std::size_t n);

// For every s, the number of nonzero entries among d_1..d_s is at most n_s.
bool is_admissible(const Composition& d, const StaircaseShape& s);

// The chain mu^(0) = (), mu^(j) = sorted_serpentine(mu^(j-1), d_j, n_j),
// one entry per column; requires is_admissible(d, s).
std::vector<Composition> iterated_chain(const Composition& d, const StaircaseShape& s);

// Final chain member mu^(m), a vector of length n_m up to trailing zeros.
Composition half_bubble_sort(const Composition& d, const StaircaseShape& s);

}  // namespace staircase

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/arrays.hpp"
#include "staircase/cherednik.hpp"
#include "staircase/composition.hpp"
#include "staircase/polynomial.hpp"
#include "staircase/serpentine.hpp"
#include "staircase/shape.hpp"

namespace staircase {

// Admissible compositions of total N in one slot per column, in the
// deterministic order of the underlying composition sweep.
std::vector<Composition> admissible_compositions(const StaircaseShape& s, std::int64_t N);

// Degree-N slice of prod_{(i,j)} 1/(1 - x_i y_j): the sum of x^hor(R) y^vrt(R)
// over all arrays R on the diagram with |R| = N. Enumerated directly from the
// cell multisets, independently of the divided-difference machinery.
BigradedPolynomial lhs_degree(const StaircaseShape& s, std::int64_t N, bool parallel = false);

// Sum of key(hb(d), x) * opposite_atom(d, y) over admissible d of degree N.
BigradedPolynomial rhs_right(const StaircaseShape& s, std::int64_t N, bool parallel = false);

// Same sum grouped through DL-dense arrays: key(hor(A), x) times the opposite
// atoms of every admissible d with hb(d) = hor(A).
BigradedPolynomial rhs_left(const StaircaseShape& s, std::int64_t N, bool parallel = false);

// Alternating form: over partitions of N and ordered pairs A >= B in the
// DL poset, key(hor(A), x) * opposite_key(vrt(B), y) * mobius(B, A).
BigradedPolynomial rhs_alternating(const StaircaseShape& s, std::int64_t N,
                                   BruhatSense orientation = BruhatSense::reversed,
                                   bool parallel = false);

// Character of the generalized right module attached to a DL-dense array,
// computed along two independent routes.
struct VdkCharacter {
    BigradedPolynomial atom_form;    // sum of opposite atoms over {d : hb(d) = hor(A)}
    BigradedPolynomial mobius_form;  // Mobius-inverted sum of opposite keys below A
    bool match = false;
};
VdkCharacter vdk_char(const ShapeArray& a, BruhatSense orientation = BruhatSense::reversed);

// Column lengths (n-p+1, n-p+2, ..., q, q, ..., q) with p columns total.
StaircaseShape agl_shape(std::int64_t n, std::int64_t p, std::int64_t q);

// The rightmost-entry elimination procedure with window k_i = min(i, n-q+1);
// returns (0^(q-p), alpha_1, ..., alpha_p).
Composition agl_prime(const Composition& d, std::int64_t n, std::int64_t p, std::int64_t q);

struct Mismatch {
    std::int64_t degree = 0;
    Monomial monomial;
    std::int64_t lhs_coefficient = 0;
    std::int64_t rhs_coefficient = 0;
    // Term-by-term breakdown of the rhs contributions at that monomial.
    std::vector<std::string> contributors;
};

struct DegreeStatus {
    std::int64_t degree = 0;
    bool exact = false;
    std::size_t lhs_terms = 0;
    std::optional<Mismatch> mismatch;
};

enum class IdentityKind { right, left, alternating, vdk_cross };

std::string identity_name(IdentityKind k);

struct VerificationReport {
    StaircaseShape shape;
    IdentityKind identity = IdentityKind::right;
    BruhatSense orientation = BruhatSense::reversed;
    std::int64_t max_degree = 0;
    bool parallel = false;
    std::vector<DegreeStatus> degrees;
    double wall_ms = 0.0;

    bool all_exact() const;
    std::optional<Mismatch> first_mismatch() const;
};

struct VerifyOptions {
    BruhatSense orientation = BruhatSense::reversed;
    bool parallel = false;
};

// Compares the degree slices of the chosen expansion against lhs_degree for
// every N <= max_degree, coefficient-exactly. vdk_cross instead cross-checks
// the two vdk_char routes on every DL-dense array of each degree.
VerificationReport verify(const StaircaseShape& s, std::int64_t max_degree, IdentityKind kind,
                          const VerifyOptions& opts = {});

}  // namespace staircase

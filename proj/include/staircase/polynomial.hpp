#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "staircase/composition.hpp"

namespace staircase {

enum class Alphabet { x, y };

// Exponent vectors for both alphabets; compared lexicographically (x first).
struct Monomial {
    std::vector<std::int32_t> x;
    std::vector<std::int32_t> y;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::int64_t x_degree() const;
    std::int64_t y_degree() const;
};

// Sparse polynomial with exact 64-bit integer coefficients in two alphabets
// x_1..x_nx, y_1..y_ny (either may be empty). No zero coefficient is stored;
// term order is the monomial order, so serialization is deterministic.
class BigradedPolynomial {
public:
    BigradedPolynomial() = default;
    BigradedPolynomial(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {}

    static BigradedPolynomial constant(std::int64_t c, std::size_t nx, std::size_t ny);
    static BigradedPolynomial monomial(std::vector<std::int32_t> xe,
                                       std::vector<std::int32_t> ye, std::int64_t c = 1);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::int64_t coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, std::int64_t c);

    BigradedPolynomial& operator+=(const BigradedPolynomial& rhs);
    BigradedPolynomial& operator-=(const BigradedPolynomial& rhs);
    friend BigradedPolynomial operator+(BigradedPolynomial a, const BigradedPolynomial& b);
    friend BigradedPolynomial operator-(BigradedPolynomial a, const BigradedPolynomial& b);
    friend BigradedPolynomial operator*(const BigradedPolynomial& a, const BigradedPolynomial& b);
    BigradedPolynomial scaled(std::int64_t c) const;

    // Same polynomial viewed with longer alphabets (new variables unused).
    BigradedPolynomial with_alphabets(std::size_t nx, std::size_t ny) const;
    // Relabel variables of one alphabet: position k moves to sigma(k).
    BigradedPolynomial permute_variables(Alphabet which, const std::vector<int>& sigma) const;
    BigradedPolynomial reverse_variables(Alphabet which) const;

    friend bool operator==(const BigradedPolynomial&, const BigradedPolynomial&) = default;

    std::string to_string() const;

private:
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    std::map<Monomial, std::int64_t> terms_;
};

// Isobaric divided difference pi_i f = (x_i f - s_i(x_i f)) / (x_i - x_{i+1}),
// realized by the closed per-monomial sum. 1 <= i < alphabet length.
BigradedPolynomial demazure_pi(const BigradedPolynomial& p, int i, Alphabet which);

// pibar_i = pi_i - id.
BigradedPolynomial demazure_pibar(const BigradedPolynomial& p, int i, Alphabet which);

// Key polynomial: divided differences along a reduced word of the minimal
// coset representative, applied to the dominant monomial.
BigradedPolynomial key_polynomial(const Composition& lambda, std::size_t n, Alphabet which);

// Same with pibar operators.
BigradedPolynomial demazure_atom(const Composition& lambda, std::size_t n, Alphabet which);

// Schur polynomial as a sum over semistandard Young tableaux with entries <= n.
BigradedPolynomial schur(const Partition& lambda, std::size_t n, Alphabet which);

// Opposite characters in y_1..y_m: compute at the reversed weight, then
// reverse the variable roles; both contain the monomial y^lambda.
BigradedPolynomial opposite_key(const Composition& lambda, std::size_t m);
BigradedPolynomial opposite_atom(const Composition& lambda, std::size_t m);

}  // namespace staircase

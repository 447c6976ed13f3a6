#include <doctest.h>

#include <stdexcept>

#include <random>

#include "staircase/permutation.hpp"
#include "staircase/polynomial.hpp"

using namespace staircase;

namespace {

BigradedPolynomial random_poly(std::mt19937& rng, std::size_t n, int max_deg, int terms) {
    BigradedPolynomial p(n, 0);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::int32_t> e(n);
        for (auto& v : e) v = static_cast<std::int32_t>(rng() % (max_deg + 1));
        p.add_term({e, {}}, static_cast<std::int64_t>(rng() % 9) - 4);
    }
    return p;
}

BigradedPolynomial x_power(std::initializer_list<std::int32_t> e) {
    return BigradedPolynomial::monomial(std::vector<std::int32_t>(e), {});
}

}  // namespace

TEST_CASE("ring basics") {
    const auto one = BigradedPolynomial::constant(1, 2, 0);
    const auto p = x_power({1, 0}) + x_power({0, 1}).scaled(2);
    CHECK(one * p == p);
    CHECK(x_power({1, 0}) * (x_power({1, 0}) + x_power({0, 1})) ==
          x_power({2, 0}) + x_power({1, 1}));
    CHECK_THROWS_AS(BigradedPolynomial(2, 0) + BigradedPolynomial(3, 0),
                    std::invalid_argument);
    CHECK((p - p).is_zero());
}

TEST_CASE("mul is commutative and associative on random inputs") {
    std::mt19937 rng(123);
    for (int t = 0; t < 30; ++t) {
        const auto a = random_poly(rng, 3, 4, 4);
        const auto b = random_poly(rng, 3, 4, 4);
        const auto c = random_poly(rng, 3, 4, 4);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("divided difference on monomials") {
    CHECK(demazure_pi(x_power({2, 0}), 1, Alphabet::x) ==
          x_power({2, 0}) + x_power({1, 1}) + x_power({0, 2}));
    CHECK(demazure_pi(x_power({1, 1}), 1, Alphabet::x) == x_power({1, 1}));
    CHECK(demazure_pi(x_power({0, 1}), 1, Alphabet::x).is_zero());
    CHECK(demazure_pi(x_power({0, 2}), 1, Alphabet::x) == x_power({1, 1}).scaled(-1));
    CHECK_THROWS_AS(demazure_pi(x_power({1, 0}), 2, Alphabet::x), std::out_of_range);
}

TEST_CASE("pibar on monomials") {
    CHECK(demazure_pibar(x_power({2, 0}), 1, Alphabet::x) == x_power({1, 1}) + x_power({0, 2}));
    const auto sym = x_power({1, 1});
    CHECK(demazure_pibar(sym, 1, Alphabet::x).is_zero());
    CHECK(demazure_pibar(BigradedPolynomial::constant(1, 2, 0), 1, Alphabet::x).is_zero());
}

TEST_CASE("operator relations under a fixed seed") {
    std::mt19937 rng(20240817);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + rng() % 3;  // up to 4 variables
        const auto p = random_poly(rng, n, 6, 5);
        const int i = 1 + static_cast<int>(rng() % (n - 1));
        const auto pi_p = demazure_pi(p, i, Alphabet::x);
        CHECK(demazure_pi(pi_p, i, Alphabet::x) == pi_p);
        const auto pibar_p = demazure_pibar(p, i, Alphabet::x);
        CHECK(demazure_pibar(pibar_p, i, Alphabet::x) == pibar_p.scaled(-1));
        if (i + 1 < static_cast<int>(n)) {
            auto lhs = demazure_pi(demazure_pi(demazure_pi(p, i, Alphabet::x), i + 1,
                                               Alphabet::x), i, Alphabet::x);
            auto rhs = demazure_pi(demazure_pi(demazure_pi(p, i + 1, Alphabet::x), i,
                                               Alphabet::x), i + 1, Alphabet::x);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("key polynomials") {
    CHECK(key_polynomial(Composition{2, 0}, 2, Alphabet::x) == x_power({2, 0}));
    CHECK(key_polynomial(Composition{0, 2}, 2, Alphabet::x) ==
          x_power({2, 0}) + x_power({1, 1}) + x_power({0, 2}));
    CHECK(key_polynomial(Composition{}, 3, Alphabet::x) ==
          BigradedPolynomial::constant(1, 3, 0));
}

TEST_CASE("keys are reduced-word independent") {
    // two reduced words of the longest element, applied manually
    for (std::size_t n : {3u, 4u}) {
        std::vector<std::int64_t> anti(n);
        for (std::size_t i = 0; i < n; ++i) anti[i] = static_cast<std::int64_t>(i);
        const Composition lam(anti);  // antidominant, sigma = w0
        const auto via_library = key_polynomial(lam, n, Alphabet::x);

        const auto dom = dominant_part(lam).as_composition().padded(n);
        std::vector<std::int32_t> e(dom.begin(), dom.end());
        auto start = BigradedPolynomial::monomial(e, {});
        // lexicographically first reduced word via the library
        auto word = reduced_word(min_coset_rep(lam, n));
        // a second reduced word: conjugate pattern 1,2,1 -> 2,1,2 at the front
        REQUIRE(word.size() >= 3);
        std::vector<int> other = word;
        // find an adjacent braid pattern i,i+1,i and rewrite it
        bool rewritten = false;
        for (std::size_t t = 0; t + 2 < other.size() && !rewritten; ++t) {
            if (other[t] == other[t + 2] && std::abs(other[t] - other[t + 1]) == 1) {
                std::swap(other[t], other[t + 1]);
                other[t + 2] = other[t];
                rewritten = true;
            }
        }
        REQUIRE(rewritten);
        auto apply = [&](const std::vector<int>& w) {
            auto acc = start;
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                acc = demazure_pi(acc, *it, Alphabet::x);
            return acc;
        };
        CHECK(apply(word) == via_library);
        CHECK(apply(other) == via_library);
    }
}

TEST_CASE("atoms") {
    CHECK(demazure_atom(Composition{2, 0}, 2, Alphabet::x) == x_power({2, 0}));
    CHECK(demazure_atom(Composition{0, 2}, 2, Alphabet::x) ==
          x_power({1, 1}) + x_power({0, 2}));
    CHECK(demazure_atom(Composition{}, 2, Alphabet::x) ==
          BigradedPolynomial::constant(1, 2, 0));
}

TEST_CASE("schur oracle") {
    CHECK(schur(Partition{1}, 2, Alphabet::x) == x_power({1, 0}) + x_power({0, 1}));
    CHECK(schur(Partition{2, 1}, 2, Alphabet::x) == x_power({2, 1}) + x_power({1, 2}));
    CHECK(schur(Partition{1, 1, 1}, 2, Alphabet::x).is_zero());
    for (std::int64_t d = 0; d <= 4; ++d) {
        std::vector<std::int64_t> col(3, 0);
        col.back() = d;
        CHECK(schur(Partition{d}, 3, Alphabet::x) ==
              key_polynomial(Composition(col), 3, Alphabet::x));
    }
}

TEST_CASE("atom sums recover keys and Schur functions") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::vector<std::int64_t> entries(n, 0);
        auto next = [&]() {
            for (std::size_t i = 0; i < n; ++i) {
                if (entries[i] < 3) {
                    ++entries[i];
                    std::fill(entries.begin(), entries.begin() + static_cast<long>(i), 0);
                    return true;
                }
            }
            return false;
        };
        do {
            const Composition lam(entries);
            const auto dom = dominant_part(lam);
            const auto tau_lam = min_coset_rep(lam, n);

            // orbit of the dominant part
            std::vector<Composition> orbit;
            for (const Permutation& sigma : all_permutations(n)) {
                Composition mu(sigma.act(dom.as_composition().padded(n)));
                if (std::find(orbit.begin(), orbit.end(), mu) == orbit.end())
                    orbit.push_back(mu);
            }

            BigradedPolynomial below(n, 0), all(n, 0);
            for (const Composition& mu : orbit) {
                const auto atom = demazure_atom(mu, n, Alphabet::x);
                all += atom;
                if (bruhat_le(min_coset_rep(mu, n), tau_lam)) below += atom;
            }
            CHECK(below == key_polynomial(lam, n, Alphabet::x));
            CHECK(all == schur(dom, n, Alphabet::x));
        } while (next());
    }
}

TEST_CASE("opposite characters") {
    // kappa^(2,0)(y1,y2) = kappa_(0,2)(y2,y1) = y1^2 + y1 y2 + y2^2
    const auto ok = opposite_key(Composition{2, 0}, 2);
    BigradedPolynomial expected(0, 2);
    expected.add_term({{}, {2, 0}}, 1);
    expected.add_term({{}, {1, 1}}, 1);
    expected.add_term({{}, {0, 2}}, 1);
    CHECK(ok == expected);
    CHECK(opposite_key(Composition{}, 3) == BigradedPolynomial::constant(1, 0, 3));
    CHECK(opposite_atom(Composition{}, 2) == BigradedPolynomial::constant(1, 0, 2));

    // y^lambda appears with coefficient 1 in both
    for (const Composition& lam :
         {Composition{2, 0, 1}, Composition{0, 3, 1}, Composition{1, 1, 2}}) {
        const auto pad = lam.padded(3);
        Monomial m{{}, {static_cast<std::int32_t>(pad[0]), static_cast<std::int32_t>(pad[1]),
                        static_cast<std::int32_t>(pad[2])}};
        CHECK(opposite_key(lam, 3).coefficient(m) == 1);
        CHECK(opposite_atom(lam, 3).coefficient(m) == 1);
    }
}

TEST_CASE("overflow is detected") {
    auto p = BigradedPolynomial::constant(INT64_MAX, 1, 0);
    CHECK_THROWS_AS(p + p, std::overflow_error);
    CHECK_THROWS_AS(p * p.scaled(1), std::overflow_error);
}

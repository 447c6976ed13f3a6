// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every comparison is exact integer equality.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "staircase/cauchy.hpp"
#include "staircase/json_io.hpp"

using namespace staircase;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++g_failures;
}

// Every non-decreasing column vector with at most max_cols columns of length
// at most max_len.
std::vector<StaircaseShape> shapes_up_to(std::int64_t max_cols, std::int64_t max_len) {
    std::vector<StaircaseShape> out;
    std::vector<std::int64_t> cols;
    auto rec = [&](auto&& self, std::int64_t lo) -> void {
        if (!cols.empty()) out.push_back(StaircaseShape::validate(cols));
        if (static_cast<std::int64_t>(cols.size()) == max_cols) return;
        for (std::int64_t v = lo; v <= max_len; ++v) {
            cols.push_back(v);
            self(self, v);
            cols.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// All compositions with the given number of parts and entries <= cap.
template <typename Fn>
void sweep_entries(std::size_t parts, std::int64_t cap, Fn&& fn) {
    std::vector<std::int64_t> entries(parts, 0);
    for (;;) {
        fn(entries);
        std::size_t i = 0;
        while (i < parts && entries[i] == cap) entries[i++] = 0;
        if (i == parts) break;
        ++entries[i];
    }
}

void criterion1_corners() {
    const auto start = Clock::now();
    const auto big = staircase_corners(StaircaseShape::validate({2, 4, 4, 4, 5, 5}));
    const auto diag = staircase_corners(StaircaseShape::validate({1, 2, 3}));
    const double elapsed = ms_since(start);

    bool ok = big.corners() == std::vector<Cell>{{2, 1}, {4, 2}, {3, 3}, {1, 4}, {5, 5}};
    const std::vector<std::pair<Cell, Cell>> expected_edges{
        {{2, 1}, {1, 4}}, {{3, 3}, {1, 4}}, {{4, 2}, {3, 3}}};
    auto edges = big.hasse_edges();
    std::sort(edges.begin(), edges.end());
    ok = ok && edges == expected_edges;
    ok = ok && diag.corners() == std::vector<Cell>{{1, 1}, {2, 2}, {3, 3}};
    ok = ok && diag.hasse_edges().empty();
    ok = ok && elapsed < 10.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "staircase-corner fixtures (%.2f ms)", elapsed);
    report(1, ok, buf);
}

void criterion2_serpentines() {
    const auto start = Clock::now();
    const auto got = serpentines(Composition{3, 0, 3, 1}, 2, 4);
    const std::set<Composition> expected{{3, 0, 3, 3}, {3, 0, 5, 1}, {3, 1, 3, 2},
                                         {3, 1, 4, 1}, {3, 0, 4, 2}};
    bool ok = std::set<Composition>(got.begin(), got.end()) == expected;

    long identities = 0;
    for (std::size_t n = 1; ok && n <= 4; ++n) {
        sweep_entries(n, 3, [&](const std::vector<std::int64_t>& entries) {
            if (!ok) return;
            const Composition lam(entries);
            const auto key_lam = key_polynomial(lam, n, Alphabet::x);
            for (std::int64_t d = 0; d <= 3; ++d) {
                const auto lhs = key_lam * schur(Partition{d}, n, Alphabet::x);
                BigradedPolynomial rhs(n, 0);
                for (const auto& mu : serpentines(lam, d, n))
                    rhs += key_polynomial(mu, n, Alphabet::x);
                if (lhs != rhs) ok = false;
                ++identities;
            }
        });
    }
    const double elapsed = ms_since(start);
    ok = ok && elapsed < 60000.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "serpentine fixture and Pieri sweep, %ld identities (%.0f ms)",
                  identities, elapsed);
    report(2, ok, buf);
}

// The piecewise description of hb on (3,4,4), taken case by case.
Composition hb344_expected(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
    if (d3 <= d1 && d3 <= d2) return Composition{0, d3, d1, d2};
    if (d3 <= d2 && d3 > d1) return Composition{0, d1, d3, d2};
    if (d1 >= d2 && d3 > d2) return Composition{0, d2, d1, d3};
    return Composition{0, d1, d2, d3};  // d3 > d2 > d1
}

void criterion3_hb() {
    const auto s344 = StaircaseShape::validate({3, 4, 4});
    bool ok = true;
    int cases = 0;
    sweep_entries(3, 4, [&](const std::vector<std::int64_t>& e) {
        ++cases;
        if (half_bubble_sort(Composition(e), s344) != hb344_expected(e[0], e[1], e[2]))
            ok = false;
    });
    ok = ok && cases == 125;

    const auto square = StaircaseShape::validate({3, 3, 3, 3});
    sweep_entries(4, 3, [&](const std::vector<std::int64_t>& e) {
        const Composition d(e);
        if (!is_admissible(d, square)) return;
        auto vals = d.padded(4);
        vals.erase(std::find(vals.begin(), vals.end(), 0));
        std::sort(vals.begin(), vals.end());
        if (half_bubble_sort(d, square) != Composition(vals)) ok = false;
    });
    report(3, ok, "half-bubble-sort piecewise formula and remove-a-zero description");
}

void criterion4_identities() {
    const auto start = Clock::now();
    bool ok = true;
    std::string first_bad;
    auto run = [&](const std::vector<std::int64_t>& cols, std::int64_t max_degree) {
        const auto s = StaircaseShape::validate(cols);
        for (const auto kind :
             {IdentityKind::right, IdentityKind::left, IdentityKind::alternating}) {
            const auto rep = verify(s, max_degree, kind, {});
            if (!rep.all_exact()) {
                ok = false;
                if (first_bad.empty())
                    first_bad = identity_name(kind) + " on " + s.to_string();
            }
        }
    };
    run({1}, 4);
    run({1, 1}, 4);
    run({1, 2}, 4);
    run({2, 2}, 4);
    run({1, 2, 3}, 4);
    run({2, 4, 4, 4, 5, 5}, 3);
    run({1, 1, 3, 3, 3, 4, 4}, 3);
    const double elapsed = ms_since(start);
    ok = ok && elapsed < 300000.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "right/left/alternating identities exact on all fixture shapes%s%s (%.0f ms)",
                  first_bad.empty() ? "" : "; first failure: ", first_bad.c_str(), elapsed);
    report(4, ok, buf);
}

void criterion5_degenerations() {
    bool ok = true;
    for (const auto& cols : {std::vector<std::int64_t>{2, 2}, {3, 3}}) {
        const auto s = StaircaseShape::validate(cols);
        const std::size_t nx = static_cast<std::size_t>(s.num_rows());
        const std::size_t ny = s.num_columns();
        for (std::int64_t N = 0; N <= 4; ++N) {
            BigradedPolynomial pairs(nx, ny);
            for (const auto& lam : partitions_of(N))
                pairs += schur(lam, nx, Alphabet::x).with_alphabets(nx, ny) *
                         schur(lam, ny, Alphabet::y).with_alphabets(nx, ny);
            if (rhs_right(s, N) != pairs) ok = false;
        }
    }
    const auto tri = StaircaseShape::validate({1, 2, 3});
    for (std::int64_t N = 0; N <= 4; ++N) {
        BigradedPolynomial direct(3, 3);
        for (const auto& d : admissible_compositions(tri, N)) {
            if (half_bubble_sort(d, tri) != d) ok = false;
            direct += key_polynomial(d, 3, Alphabet::x).with_alphabets(3, 3) *
                      opposite_atom(d, 3).with_alphabets(3, 3);
        }
        if (rhs_right(tri, N) != direct) ok = false;
    }
    report(5, ok, "rectangle Schur-pair and upper-triangular degenerations");
}

void criterion6_agl() {
    bool ok = true;
    for (const auto& [n, p, q] :
         {std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, 2, 2}, {4, 3, 3}, {5, 3, 4}}) {
        const auto s = agl_shape(n, p, q);
        sweep_entries(static_cast<std::size_t>(p), 3, [&](const std::vector<std::int64_t>& e) {
            const Composition d(e);
            if (agl_prime(d, n, p, q) != half_bubble_sort(d, s)) ok = false;
        });
    }
    report(6, ok, "elimination-window formula equals half-bubble-sort");
}

bool prop_bruhat_oracle() {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto& v : all_permutations(n)) {
            const auto word = reduced_word(v);
            std::set<Permutation> down;
            for (std::size_t mask = 0; mask < (std::size_t{1} << word.size()); ++mask) {
                Permutation u(n);
                for (std::size_t t = 0; t < word.size(); ++t)
                    if (mask & (std::size_t{1} << t))
                        u = u * Permutation::simple_reflection(word[t], n);
                down.insert(u);
            }
            for (const auto& u : all_permutations(n))
                if (bruhat_le(u, v) != (down.count(u) > 0)) return false;
        }
    }
    return true;
}

bool prop_operator_relations() {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        BigradedPolynomial p(n, 0);
        for (int t = 0; t < 5; ++t) {
            std::vector<std::int32_t> e(n);
            for (auto& v : e) v = static_cast<std::int32_t>(rng() % 7);
            p.add_term({e, {}}, static_cast<std::int64_t>(rng() % 9) - 4);
        }
        const int i = 1 + static_cast<int>(rng() % (n - 1));
        const auto pi_p = demazure_pi(p, i, Alphabet::x);
        if (demazure_pi(pi_p, i, Alphabet::x) != pi_p) return false;
        const auto pibar_p = demazure_pibar(p, i, Alphabet::x);
        if (demazure_pibar(pibar_p, i, Alphabet::x) != pibar_p.scaled(-1)) return false;
        if (i + 1 < static_cast<int>(n)) {
            const auto lhs = demazure_pi(
                demazure_pi(demazure_pi(p, i, Alphabet::x), i + 1, Alphabet::x), i, Alphabet::x);
            const auto rhs = demazure_pi(
                demazure_pi(demazure_pi(p, i + 1, Alphabet::x), i, Alphabet::x), i + 1,
                Alphabet::x);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool prop_atom_sums() {
    for (std::size_t n = 1; n <= 3; ++n) {
        bool ok = true;
        sweep_entries(n, 3, [&](const std::vector<std::int64_t>& entries) {
            if (!ok) return;
            const Composition lam(entries);
            const auto dom = dominant_part(lam);
            const auto tau_lam = min_coset_rep(lam, n);
            std::set<Composition> orbit;
            for (const auto& sigma : all_permutations(n))
                orbit.insert(Composition(sigma.act(dom.as_composition().padded(n))));
            BigradedPolynomial below(n, 0), all(n, 0);
            for (const auto& mu : orbit) {
                const auto atom = demazure_atom(mu, n, Alphabet::x);
                all += atom;
                if (bruhat_le(min_coset_rep(mu, n), tau_lam)) below += atom;
            }
            if (below != key_polynomial(lam, n, Alphabet::x)) ok = false;
            if (all != schur(dom, n, Alphabet::x)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool prop_hb_suite() {
    for (const auto& s : shapes_up_to(5, 5)) {
        const auto poset = staircase_corners(s);
        const auto st = s.transpose();
        const std::size_t m = s.num_columns();
        const std::size_t nm = static_cast<std::size_t>(s.num_rows());
        bool ok = true;
        sweep_entries(m, 3, [&](const std::vector<std::int64_t>& e) {
            if (!ok) return;
            const Composition d(e);
            if (!is_admissible(d, s)) return;
            const auto hb = half_bubble_sort(d, s);
            const auto hbv = hb.padded(nm);
            // rows without corners stay empty
            for (std::int64_t i = 1; i <= s.num_rows(); ++i)
                if (poset.corner_column_in_row(i) == 0 &&
                    hbv[static_cast<std::size_t>(i) - 1] != 0)
                    ok = false;
            // greater corners carry at least the value of smaller ones
            for (const Cell& a : poset.corners())
                for (const Cell& b : poset.corners())
                    if (a != b && poset.le(b, a) &&
                        hbv[static_cast<std::size_t>(a.row) - 1] <
                            hbv[static_cast<std::size_t>(b.row) - 1])
                        ok = false;
            // realized by the corner-supported array with the hb row values
            ShapeArray realizer(s);
            for (const Cell& c : poset.corners())
                realizer.set(c, hbv[static_cast<std::size_t>(c.row) - 1]);
            if (realizer.hor() != hb || !is_dl_dense(realizer, poset)) ok = false;
            // double sort: a compatible rearrangement along the corner columns
            const Composition once = w0_reverse(hb, nm);
            if (!is_admissible(once, st)) {
                ok = false;
                return;
            }
            const Composition twice = w0_reverse(half_bubble_sort(once, st), m);
            auto sorted_in = d.padded(m);
            auto sorted_out = twice.padded(m);
            std::sort(sorted_in.begin(), sorted_in.end());
            std::sort(sorted_out.begin(), sorted_out.end());
            if (sorted_in != sorted_out) ok = false;
            const auto tw = twice.padded(m);
            for (std::size_t j = 1; j <= m; ++j)
                if (tw[j - 1] != 0 &&
                    poset.corner_row_in_column(static_cast<std::int64_t>(j)) == 0)
                    ok = false;
            for (const Cell& p : poset.corners())
                for (const Cell& q : poset.corners())
                    if (p != q && poset.le(p, q) &&
                        tw[static_cast<std::size_t>(p.col) - 1] >
                            tw[static_cast<std::size_t>(q.col) - 1])
                        ok = false;
        });
        if (!ok) return false;
    }
    // Cherednik monotonicity, swept over comparable pairs of equal degree
    for (const auto& s : shapes_up_to(5, 5)) {
        const std::size_t m = s.num_columns();
        const std::size_t nm = static_cast<std::size_t>(s.num_rows());
        for (std::int64_t N = 1; N <= 4; ++N) {
            const auto ds = admissible_compositions(s, N);
            for (const auto& c : ds)
                for (const auto& d : ds)
                    if (cherednik_le(c, d, m) &&
                        !cherednik_le(half_bubble_sort(c, s), half_bubble_sort(d, s), nm))
                        return false;
        }
    }
    return true;
}

bool prop_vdk_cross() {
    for (const auto& cols :
         {std::vector<std::int64_t>{1, 2}, {2, 2}, {1, 2, 3}, {2, 4, 4, 4, 5, 5}}) {
        const auto s = StaircaseShape::validate(cols);
        for (std::int64_t N = 0; N <= 4; ++N)
            for (const auto& a : enumerate_dl(s, N))
                if (!vdk_char(a).match) return false;
    }
    return true;
}

void criterion7_properties() {
    std::string failed;
    if (!prop_bruhat_oracle()) failed += " bruhat-oracle";
    if (!prop_operator_relations()) failed += " operator-relations";
    if (!prop_atom_sums()) failed += " atom-sums";
    if (!prop_hb_suite()) failed += " hb-suite";
    if (!prop_vdk_cross()) failed += " vdk-cross";
    report(7, failed.empty(),
           failed.empty() ? "property suites (fixed seed) all green"
                          : "failing suites:" + failed);
}

}  // namespace

int main() {
    const auto start = Clock::now();
    criterion1_corners();
    criterion2_serpentines();
    criterion3_hb();
    criterion4_identities();
    criterion5_degenerations();
    criterion6_agl();
    criterion7_properties();
    std::printf("%s: %d of 7 criteria failed (%.0f ms total)\n",
                g_failures == 0 ? "OK" : "FAILURES", g_failures, ms_since(start));
    return g_failures == 0 ? 0 : 1;
}

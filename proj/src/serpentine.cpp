#include "staircase/serpentine.hpp"

#include <algorithm>
#include <stdexcept>

namespace staircase {

std::vector<Composition> serpentines(const Composition& lambda, std::int64_t d, std::size_t n) {
    if (d < 0) throw std::invalid_argument("serpentines: d must be >= 0");
    const auto lam = lambda.padded(n);
    std::vector<Composition> out;
    std::vector<std::int64_t> mu(n, 0);

    auto rec = [&](auto&& self, std::size_t pos, std::int64_t rest) -> void {
        if (pos == n) {
            if (rest == 0) out.emplace_back(mu);
            return;
        }
        std::int64_t ub = lam[pos] + rest;
        // Third condition bounds mu_pos by every later lambda_j >= lambda_pos.
        for (std::size_t j = pos + 1; j < n; ++j)
            if (lam[j] >= lam[pos]) ub = std::min(ub, lam[j]);
        // Fourth condition: an earlier grown entry mu_k > lambda_k with
        // lambda_k > lambda_pos forces mu_pos < lambda_k.
        for (std::size_t k = 0; k < pos; ++k)
            if (mu[k] > lam[k] && lam[k] > lam[pos]) ub = std::min(ub, lam[k] - 1);
        for (std::int64_t v = lam[pos]; v <= ub; ++v) {
            mu[pos] = v;
            self(self, pos + 1, rest - (v - lam[pos]));
        }
        mu[pos] = lam[pos];
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Composition> sorted_serpentine(const Composition& lambda, std::int64_t d,
                                             std::size_t n) {
    if (d < 0) throw std::invalid_argument("sorted_serpentine: d must be >= 0");
    const auto lam = lambda.padded(n);
    if (d == 0) return Composition(lam);

    std::size_t cur = 0;  // 1-based once found
    for (std::size_t i = n; i >= 1; --i) {
        if (lam[i - 1] == 0) {
            cur = i;
            break;
        }
    }
    if (cur == 0) return std::nullopt;

    auto mu = lam;
    for (;;) {
        std::int64_t val = d;
        for (std::size_t j = cur + 1; j <= n; ++j) val = std::min(val, lam[j - 1]);
        mu[cur - 1] = val;
        if (val == d) break;
        // Next index: the last position of lambda holding the value just placed.
        std::size_t next = 0;
        for (std::size_t i = n; i >= 1; --i) {
            if (lam[i - 1] == val) {
                next = i;
                break;
            }
        }
        if (next <= cur) throw std::logic_error("serpentine recursion failed to advance");
        cur = next;
    }
    return Composition(std::move(mu));
}

bool is_admissible(const Composition& d, const StaircaseShape& s) {
    const std::size_t m = s.num_columns();
    if (d.canonical_size() > m)
        throw std::invalid_argument("composition longer than the number of columns");
    std::int64_t nonzero = 0;
    for (std::size_t j = 1; j <= m; ++j) {
        if (d.at(j) != 0) ++nonzero;
        if (nonzero > s.column_length(j)) return false;
    }
    return true;
}

std::vector<Composition> iterated_chain(const Composition& d, const StaircaseShape& s) {
    if (!is_admissible(d, s))
        throw std::invalid_argument("composition " + d.to_string() + " is not admissible for " +
                                    s.to_string());
    std::vector<Composition> chain;
    Composition mu;
    for (std::size_t j = 1; j <= s.num_columns(); ++j) {
        const auto n_j = static_cast<std::size_t>(s.column_length(j));
        auto next = sorted_serpentine(mu, d.at(j), n_j);
        // Admissibility leaves a free zero slot whenever d_j > 0.
        if (!next) throw std::logic_error("iterated chain step has no serpentine");
        mu = *next;
        chain.push_back(mu);
    }
    return chain;
}

Composition half_bubble_sort(const Composition& d, const StaircaseShape& s) {
    return iterated_chain(d, s).back();
}

}  // namespace staircase

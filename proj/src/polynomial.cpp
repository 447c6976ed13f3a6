#include "staircase/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "staircase/permutation.hpp"

namespace staircase {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
    return r;
}

std::int32_t to_exponent(std::int64_t v) {
    if (v < 0 || v > INT32_MAX) throw std::overflow_error("exponent out of range");
    return static_cast<std::int32_t>(v);
}

}  // namespace

std::int64_t Monomial::x_degree() const {
    return std::accumulate(x.begin(), x.end(), std::int64_t{0});
}

std::int64_t Monomial::y_degree() const {
    return std::accumulate(y.begin(), y.end(), std::int64_t{0});
}

BigradedPolynomial BigradedPolynomial::constant(std::int64_t c, std::size_t nx, std::size_t ny) {
    BigradedPolynomial p(nx, ny);
    p.add_term({std::vector<std::int32_t>(nx, 0), std::vector<std::int32_t>(ny, 0)}, c);
    return p;
}

BigradedPolynomial BigradedPolynomial::monomial(std::vector<std::int32_t> xe,
                                                std::vector<std::int32_t> ye, std::int64_t c) {
    BigradedPolynomial p(xe.size(), ye.size());
    p.add_term({std::move(xe), std::move(ye)}, c);
    return p;
}

std::int64_t BigradedPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void BigradedPolynomial::add_term(const Monomial& m, std::int64_t c) {
    if (c == 0) return;
    if (m.x.size() != nx_ || m.y.size() != ny_)
        throw std::invalid_argument("monomial does not match alphabet lengths");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

BigradedPolynomial& BigradedPolynomial::operator+=(const BigradedPolynomial& rhs) {
    if (nx_ != rhs.nx_ || ny_ != rhs.ny_) throw std::invalid_argument("alphabet mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BigradedPolynomial& BigradedPolynomial::operator-=(const BigradedPolynomial& rhs) {
    if (nx_ != rhs.nx_ || ny_ != rhs.ny_) throw std::invalid_argument("alphabet mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, checked_mul(c, -1));
    return *this;
}

BigradedPolynomial operator+(BigradedPolynomial a, const BigradedPolynomial& b) {
    a += b;
    return a;
}

BigradedPolynomial operator-(BigradedPolynomial a, const BigradedPolynomial& b) {
    a -= b;
    return a;
}

BigradedPolynomial operator*(const BigradedPolynomial& a, const BigradedPolynomial& b) {
    if (a.nx_ != b.nx_ || a.ny_ != b.ny_) throw std::invalid_argument("alphabet mismatch");
    BigradedPolynomial out(a.nx_, a.ny_);
    Monomial m;
    m.x.resize(a.nx_);
    m.y.resize(a.ny_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t k = 0; k < a.nx_; ++k) m.x[k] = ma.x[k] + mb.x[k];
            for (std::size_t k = 0; k < a.ny_; ++k) m.y[k] = ma.y[k] + mb.y[k];
            out.add_term(m, checked_mul(ca, cb));
        }
    }
    return out;
}

BigradedPolynomial BigradedPolynomial::scaled(std::int64_t c) const {
    BigradedPolynomial out(nx_, ny_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, checked_mul(coeff, c));
    return out;
}

BigradedPolynomial BigradedPolynomial::with_alphabets(std::size_t nx, std::size_t ny) const {
    if (nx < nx_ || ny < ny_) throw std::invalid_argument("alphabets can only grow");
    BigradedPolynomial out(nx, ny);
    for (const auto& [m, c] : terms_) {
        Monomial e;
        e.x = m.x;
        e.x.resize(nx, 0);
        e.y = m.y;
        e.y.resize(ny, 0);
        out.add_term(e, c);
    }
    return out;
}

BigradedPolynomial BigradedPolynomial::permute_variables(Alphabet which,
                                                         const std::vector<int>& sigma) const {
    const std::size_t len = which == Alphabet::x ? nx_ : ny_;
    if (sigma.size() != len) throw std::invalid_argument("permutation/alphabet size mismatch");
    BigradedPolynomial out(nx_, ny_);
    for (const auto& [m, c] : terms_) {
        Monomial e = m;
        auto& v = which == Alphabet::x ? e.x : e.y;
        const auto& src = which == Alphabet::x ? m.x : m.y;
        for (std::size_t k = 0; k < len; ++k) v[static_cast<std::size_t>(sigma[k]) - 1] = src[k];
        out.add_term(e, c);
    }
    return out;
}

BigradedPolynomial BigradedPolynomial::reverse_variables(Alphabet which) const {
    const std::size_t len = which == Alphabet::x ? nx_ : ny_;
    std::vector<int> rev(len);
    for (std::size_t k = 0; k < len; ++k) rev[k] = static_cast<int>(len - k);
    return permute_variables(which, rev);
}

std::string BigradedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        first = false;
        const std::int64_t abs_c = c < 0 ? -c : c;
        bool printed = false;
        if (abs_c != 1) {
            os << abs_c;
            printed = true;
        }
        auto emit = [&](char name, const std::vector<std::int32_t>& e) {
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (printed) os << '*';
                os << name << (k + 1);
                if (e[k] > 1) os << '^' << e[k];
                printed = true;
            }
        };
        emit('x', m.x);
        emit('y', m.y);
        if (!printed) os << 1;
    }
    return os.str();
}

BigradedPolynomial demazure_pi(const BigradedPolynomial& p, int i, Alphabet which) {
    const std::size_t len = which == Alphabet::x ? p.nx() : p.ny();
    if (i < 1 || static_cast<std::size_t>(i) >= len)
        throw std::out_of_range("divided difference index out of range");
    BigradedPolynomial out(p.nx(), p.ny());
    const std::size_t k = static_cast<std::size_t>(i) - 1;
    for (const auto& [m, c] : p.terms()) {
        Monomial e = m;
        auto& v = which == Alphabet::x ? e.x : e.y;
        const std::int32_t a = v[k], b = v[k + 1];
        if (a >= b) {
            for (std::int32_t j = b; j <= a; ++j) {
                v[k] = j;
                v[k + 1] = a + b - j;
                out.add_term(e, c);
            }
        } else if (a + 1 < b) {
            for (std::int32_t j = a + 1; j <= b - 1; ++j) {
                v[k] = j;
                v[k + 1] = a + b - j;
                out.add_term(e, -c);
            }
        }
    }
    return out;
}

BigradedPolynomial demazure_pibar(const BigradedPolynomial& p, int i, Alphabet which) {
    return demazure_pi(p, i, which) - p;
}

namespace {

BigradedPolynomial dominant_monomial(const Composition& lambda, std::size_t n, Alphabet which) {
    const auto dom = dominant_part(lambda).as_composition().padded(n);
    std::vector<std::int32_t> e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = to_exponent(dom[k]);
    return which == Alphabet::x ? BigradedPolynomial::monomial(std::move(e), {})
                                : BigradedPolynomial::monomial({}, std::move(e));
}

template <typename Op>
BigradedPolynomial apply_along_word(const Composition& lambda, std::size_t n, Alphabet which,
                                    Op&& op) {
    if (lambda.canonical_size() > n)
        throw std::invalid_argument("composition does not fit in " + std::to_string(n) +
                                    " variables");
    BigradedPolynomial out = dominant_monomial(lambda, n, which);
    const auto word = reduced_word(min_coset_rep(lambda, n));
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = op(out, *it, which);
    return out;
}

}  // namespace

BigradedPolynomial key_polynomial(const Composition& lambda, std::size_t n, Alphabet which) {
    return apply_along_word(lambda, n, which, demazure_pi);
}

BigradedPolynomial demazure_atom(const Composition& lambda, std::size_t n, Alphabet which) {
    return apply_along_word(lambda, n, which, demazure_pibar);
}

BigradedPolynomial schur(const Partition& lambda, std::size_t n, Alphabet which) {
    const std::size_t rows = lambda.length();
    BigradedPolynomial out = which == Alphabet::x ? BigradedPolynomial(n, 0)
                                                  : BigradedPolynomial(0, n);
    if (rows > n) return out;  // no column-strict filling exists
    if (rows == 0) return BigradedPolynomial::constant(1, out.nx(), out.ny());

    std::vector<std::vector<std::int32_t>> tableau(rows);
    for (std::size_t r = 0; r < rows; ++r)
        tableau[r].resize(static_cast<std::size_t>(lambda.at(r + 1)));
    std::vector<std::int32_t> weightv(n, 0);

    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == rows) {
            out.add_term(which == Alphabet::x ? Monomial{weightv, {}} : Monomial{{}, weightv}, 1);
            return;
        }
        const std::size_t next_c = c + 1 < tableau[r].size() ? c + 1 : 0;
        const std::size_t next_r = next_c == 0 ? r + 1 : r;
        std::int32_t lo = 1;
        if (c > 0) lo = std::max(lo, tableau[r][c - 1]);                 // rows weakly increase
        if (r > 0) lo = std::max(lo, tableau[r - 1][c] + 1);             // columns strictly
        for (std::int32_t v = lo; v <= static_cast<std::int32_t>(n); ++v) {
            tableau[r][c] = v;
            ++weightv[v - 1];
            self(self, next_r, next_c);
            --weightv[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

BigradedPolynomial opposite_key(const Composition& lambda, std::size_t m) {
    return key_polynomial(w0_reverse(lambda, m), m, Alphabet::y).reverse_variables(Alphabet::y);
}

BigradedPolynomial opposite_atom(const Composition& lambda, std::size_t m) {
    return demazure_atom(w0_reverse(lambda, m), m, Alphabet::y).reverse_variables(Alphabet::y);
}

}  // namespace staircase

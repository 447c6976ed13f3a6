#include "staircase/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace staircase {

Permutation::Permutation(std::size_t n) : line_(n) {
    std::iota(line_.begin(), line_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
    std::vector<bool> seen(line_.size(), false);
    for (int v : line_) {
        if (v < 1 || static_cast<std::size_t>(v) > line_.size() || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::simple_reflection(int i, std::size_t n) {
    if (i < 1 || static_cast<std::size_t>(i) >= n)
        throw std::out_of_range("simple reflection index out of range");
    Permutation p(n);
    std::swap(p.line_[i - 1], p.line_[i]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(line_.size());
    for (std::size_t k = 0; k < line_.size(); ++k) inv[line_[k] - 1] = static_cast<int>(k + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = line_[rhs.line_[i] - 1];
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < line_.size(); ++i)
        if (line_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::size_t Permutation::inversions() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < line_.size(); ++i)
        for (std::size_t j = i + 1; j < line_.size(); ++j)
            if (line_[i] > line_[j]) ++count;
    return count;
}

std::vector<std::int64_t> Permutation::act(const std::vector<std::int64_t>& v) const {
    if (v.size() != size()) throw std::invalid_argument("vector/permutation size mismatch");
    std::vector<std::int64_t> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[line_[k] - 1] = v[k];
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < line_.size(); ++i) {
        if (i) os << ',';
        os << line_[i];
    }
    os << ']';
    return os.str();
}

Permutation min_coset_rep(const Composition& c, std::size_t n) {
    const auto v = c.padded(n);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 1);
    // Stable: equal entries keep their original order, which minimizes length.
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return v[a - 1] > v[b - 1]; });
    return Permutation(std::move(idx));
}

bool bruhat_le(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("permutation size mismatch");
    const int n = static_cast<int>(u.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int cu = 0, cv = 0;
            for (int a = 1; a <= i; ++a) {
                if (u(a) >= j) ++cu;
                if (v(a) >= j) ++cv;
            }
            if (cu > cv) return false;
        }
    }
    return true;
}

std::vector<int> reduced_word(const Permutation& u) {
    Permutation w = u;
    std::vector<int> right_factors;  // w * s_{j_1} * ... * s_{j_k} = e
    const int n = static_cast<int>(u.size());
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (int i = 1; i < n; ++i) {
            if (w(i) > w(i + 1)) {
                std::vector<int> line = w.one_line();
                std::swap(line[i - 1], line[i]);
                w = Permutation(std::move(line));
                right_factors.push_back(i);
                reduced = true;
                break;
            }
        }
    }
    std::reverse(right_factors.begin(), right_factors.end());
    return right_factors;
}

Composition w0_reverse(const Composition& c, std::size_t n) {
    auto v = c.padded(n);
    std::reverse(v.begin(), v.end());
    return Composition(std::move(v));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace staircase

#include "staircase/cauchy.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace staircase {

namespace {

// Sums term polynomials either serially or with an OpenMP reduction into
// per-thread partials. Integer addition commutes, so both paths produce the
// same polynomial.
template <typename TermFn>
BigradedPolynomial accumulate_terms(std::size_t count, std::size_t nx, std::size_t ny,
                                    bool parallel, TermFn&& term_fn) {
    BigradedPolynomial out(nx, ny);
    if (!parallel) {
        for (std::size_t i = 0; i < count; ++i) out += term_fn(i);
        return out;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
        BigradedPolynomial local(nx, ny);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
            local += term_fn(static_cast<std::size_t>(i));
#pragma omp critical
        out += local;
    }
    return out;
#else
    for (std::size_t i = 0; i < count; ++i) out += term_fn(i);
    return out;
#endif
}

// Per-run character store. fill() computes the distinct weights up front (in
// parallel when asked) so later lookups are read-only.
class CharTable {
public:
    CharTable(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {}

    void request_key(const Composition& w) { keys_.emplace(w, BigradedPolynomial()); }
    void request_atom(const Composition& d) { atoms_.emplace(d, BigradedPolynomial()); }
    void request_opposite_key(const Composition& w) { okeys_.emplace(w, BigradedPolynomial()); }

    void fill(bool parallel) {
        fill_map(keys_, parallel, [&](const Composition& w) {
            return key_polynomial(w, nx_, Alphabet::x).with_alphabets(nx_, ny_);
        });
        fill_map(atoms_, parallel, [&](const Composition& d) {
            return opposite_atom(d, ny_).with_alphabets(nx_, ny_);
        });
        fill_map(okeys_, parallel, [&](const Composition& w) {
            return opposite_key(w, ny_).with_alphabets(nx_, ny_);
        });
    }

    const BigradedPolynomial& key(const Composition& w) const { return keys_.at(w); }
    const BigradedPolynomial& atom(const Composition& d) const { return atoms_.at(d); }
    const BigradedPolynomial& opposite_key_of(const Composition& w) const { return okeys_.at(w); }

private:
    template <typename Fn>
    static void fill_map(std::map<Composition, BigradedPolynomial>& m, bool parallel, Fn&& fn) {
        std::vector<std::map<Composition, BigradedPolynomial>::iterator> slots;
        slots.reserve(m.size());
        for (auto it = m.begin(); it != m.end(); ++it) slots.push_back(it);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(slots.size()); ++i)
            slots[static_cast<std::size_t>(i)]->second = fn(slots[static_cast<std::size_t>(i)]->first);
    }

    std::size_t nx_, ny_;
    std::map<Composition, BigradedPolynomial> keys_;
    std::map<Composition, BigradedPolynomial> atoms_;
    std::map<Composition, BigradedPolynomial> okeys_;
};

// Terms of the alternating sum: ordered pairs b <= a inside one DL poset.
struct AltTerm {
    const DLPoset* poset;
    std::size_t a;
    std::size_t b;
    std::int64_t mu;
};

std::vector<Partition> alternating_partitions(const StaircaseShape& s, std::int64_t N) {
    const std::size_t max_parts = staircase_corners(s).size();
    std::vector<Partition> out;
    for (const Partition& lam : partitions_of(N))
        if (lam.length() <= max_parts) out.push_back(lam);
    return out;
}

}  // namespace

std::vector<Composition> admissible_compositions(const StaircaseShape& s, std::int64_t N) {
    std::vector<Composition> out;
    for_each_composition(N, s.num_columns(), [&](const std::vector<std::int64_t>& parts) {
        Composition d(parts);
        if (is_admissible(d, s)) out.push_back(std::move(d));
    });
    return out;
}

BigradedPolynomial lhs_degree(const StaircaseShape& s, std::int64_t N, bool parallel) {
    if (N < 0) throw std::invalid_argument("lhs_degree: negative degree");
    const auto cells = s.cells();
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();
    if (cells.empty()) {
        BigradedPolynomial out(nx, ny);
        if (N == 0) out = BigradedPolynomial::constant(1, nx, ny);
        return out;
    }

    auto enumerate_from = [&](std::size_t first_pos, std::int64_t first_val) {
        BigradedPolynomial local(nx, ny);
        Monomial mono{std::vector<std::int32_t>(nx, 0), std::vector<std::int32_t>(ny, 0)};
        auto place = [&](std::size_t pos, std::int64_t v) {
            mono.x[static_cast<std::size_t>(cells[pos].row) - 1] += static_cast<std::int32_t>(v);
            mono.y[static_cast<std::size_t>(cells[pos].col) - 1] += static_cast<std::int32_t>(v);
        };
        auto unplace = [&](std::size_t pos, std::int64_t v) {
            mono.x[static_cast<std::size_t>(cells[pos].row) - 1] -= static_cast<std::int32_t>(v);
            mono.y[static_cast<std::size_t>(cells[pos].col) - 1] -= static_cast<std::int32_t>(v);
        };
        place(first_pos, first_val);
        auto rec = [&](auto&& self, std::size_t pos, std::int64_t rest) -> void {
            if (pos == cells.size()) {
                if (rest == 0) local.add_term(mono, 1);
                return;
            }
            if (pos + 1 == cells.size()) {
                place(pos, rest);
                local.add_term(mono, 1);
                unplace(pos, rest);
                return;
            }
            for (std::int64_t v = 0; v <= rest; ++v) {
                place(pos, v);
                self(self, pos + 1, rest - v);
                unplace(pos, v);
            }
        };
        rec(rec, first_pos + 1, N - first_val);
        unplace(first_pos, first_val);
        return local;
    };

    return accumulate_terms(static_cast<std::size_t>(N) + 1, nx, ny, parallel,
                            [&](std::size_t i) {
                                return enumerate_from(0, static_cast<std::int64_t>(i));
                            });
}

BigradedPolynomial rhs_right(const StaircaseShape& s, std::int64_t N, bool parallel) {
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();
    const auto ds = admissible_compositions(s, N);

    std::vector<Composition> hbs;
    hbs.reserve(ds.size());
    CharTable table(nx, ny);
    for (const Composition& d : ds) {
        hbs.push_back(half_bubble_sort(d, s));
        table.request_key(hbs.back());
        table.request_atom(d);
    }
    table.fill(parallel);

    return accumulate_terms(ds.size(), nx, ny, parallel, [&](std::size_t i) {
        return table.key(hbs[i]) * table.atom(ds[i]);
    });
}

BigradedPolynomial rhs_left(const StaircaseShape& s, std::int64_t N, bool parallel) {
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();
    const auto arrays = enumerate_dl(s, N);

    // Group the admissible compositions by their half-bubble-sort image.
    std::map<Composition, std::vector<Composition>> fibers;
    for (const Composition& d : admissible_compositions(s, N))
        fibers[half_bubble_sort(d, s)].push_back(d);

    CharTable table(nx, ny);
    for (const auto& a : arrays) table.request_key(a.hor());
    for (const auto& [w, ds] : fibers)
        for (const Composition& d : ds) table.request_atom(d);
    table.fill(parallel);

    return accumulate_terms(arrays.size(), nx, ny, parallel, [&](std::size_t i) {
        const Composition w = arrays[i].hor();
        BigradedPolynomial atoms(nx, ny);
        auto it = fibers.find(w);
        if (it != fibers.end())
            for (const Composition& d : it->second) atoms += table.atom(d);
        return table.key(w) * atoms;
    });
}

BigradedPolynomial rhs_alternating(const StaircaseShape& s, std::int64_t N,
                                   BruhatSense orientation, bool parallel) {
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();

    std::vector<DLPoset> posets;
    for (const Partition& lam : alternating_partitions(s, N))
        posets.emplace_back(s, lam, orientation);

    std::vector<AltTerm> terms;
    CharTable table(nx, ny);
    for (const DLPoset& p : posets) {
        for (std::size_t a = 0; a < p.size(); ++a) {
            table.request_key(p.elements()[a].hor());
            table.request_opposite_key(p.elements()[a].vrt());
            for (std::size_t b = 0; b < p.size(); ++b)
                if (p.le(b, a)) terms.push_back({&p, a, b, p.mobius(b, a)});
        }
    }
    table.fill(parallel);

    return accumulate_terms(terms.size(), nx, ny, parallel, [&](std::size_t i) {
        const AltTerm& t = terms[i];
        const auto& A = t.poset->elements()[t.a];
        const auto& B = t.poset->elements()[t.b];
        return (table.key(A.hor()) * table.opposite_key_of(B.vrt())).scaled(t.mu);
    });
}

VdkCharacter vdk_char(const ShapeArray& a, BruhatSense orientation) {
    const StaircaseShape& s = a.shape();
    const std::size_t m = s.num_columns();
    const ScPoset corners = staircase_corners(s);
    if (!is_dl_dense(a, corners)) throw std::invalid_argument("array is not DL-dense");

    const std::int64_t N = a.degree();
    const Composition target = a.hor();

    VdkCharacter out{BigradedPolynomial(0, m), BigradedPolynomial(0, m), false};
    for (const Composition& d : admissible_compositions(s, N))
        if (half_bubble_sort(d, s) == target) out.atom_form += opposite_atom(d, m);

    const DLPoset poset(s, dominant_part(a.vrt()), orientation);
    const std::size_t ia = poset.index_of(a);
    for (std::size_t b = 0; b < poset.size(); ++b)
        if (poset.le(b, ia))
            out.mobius_form +=
                opposite_key(poset.elements()[b].vrt(), m).scaled(poset.mobius(b, ia));

    out.match = out.atom_form == out.mobius_form;
    return out;
}

StaircaseShape agl_shape(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (!(n >= q && q >= p && p >= 1))
        throw std::invalid_argument("need n >= q >= p >= 1");
    if (n - p + 1 > q) throw std::invalid_argument("need n - p + 1 <= q");
    std::vector<std::int64_t> cols;
    for (std::int64_t v = n - p + 1; v <= q; ++v) cols.push_back(v);
    for (std::int64_t t = 0; t < n - q; ++t) cols.push_back(q);
    return StaircaseShape::validate(cols);
}

Composition agl_prime(const Composition& d, std::int64_t n, std::int64_t p, std::int64_t q) {
    agl_shape(n, p, q);  // validates the parameter constraints
    if (d.canonical_size() > static_cast<std::size_t>(p))
        throw std::invalid_argument("composition longer than p");
    const auto entries = d.padded(static_cast<std::size_t>(p));

    std::vector<std::int64_t> alpha(static_cast<std::size_t>(p), 0);
    for (std::int64_t i = p; i >= 1; --i) {
        std::vector<bool> ignored(static_cast<std::size_t>(p), false);
        for (std::int64_t j = i + 1; j <= p; ++j) {
            bool found = false;
            for (std::int64_t t = p; t >= 1; --t) {
                if (!ignored[static_cast<std::size_t>(t) - 1] &&
                    entries[static_cast<std::size_t>(t) - 1] ==
                        alpha[static_cast<std::size_t>(j) - 1]) {
                    ignored[static_cast<std::size_t>(t) - 1] = true;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("elimination step found no matching entry");
        }
        const std::int64_t window = std::min<std::int64_t>(i, n - q + 1);
        std::int64_t seen = 0;
        std::int64_t best = -1;
        for (std::int64_t t = p; t >= 1 && seen < window; --t) {
            if (ignored[static_cast<std::size_t>(t) - 1]) continue;
            best = std::max(best, entries[static_cast<std::size_t>(t) - 1]);
            ++seen;
        }
        if (best < 0) throw std::logic_error("empty elimination window");
        alpha[static_cast<std::size_t>(i) - 1] = best;
    }

    std::vector<std::int64_t> out(static_cast<std::size_t>(q - p), 0);
    out.insert(out.end(), alpha.begin(), alpha.end());
    return Composition(std::move(out));
}

std::string identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::right: return "right";
        case IdentityKind::left: return "left";
        case IdentityKind::alternating: return "alternating";
        case IdentityKind::vdk_cross: return "vdk-cross";
    }
    return "?";
}

bool VerificationReport::all_exact() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const DegreeStatus& d) { return d.exact; });
}

std::optional<Mismatch> VerificationReport::first_mismatch() const {
    for (const auto& d : degrees)
        if (d.mismatch) return d.mismatch;
    return std::nullopt;
}

namespace {

std::optional<Monomial> smallest_difference(const BigradedPolynomial& lhs,
                                            const BigradedPolynomial& rhs) {
    auto il = lhs.terms().begin();
    auto ir = rhs.terms().begin();
    while (il != lhs.terms().end() || ir != rhs.terms().end()) {
        if (ir == rhs.terms().end() || (il != lhs.terms().end() && il->first < ir->first))
            return il->first;
        if (il == lhs.terms().end() || ir->first < il->first) return ir->first;
        if (il->second != ir->second) return il->first;
        ++il;
        ++ir;
    }
    return std::nullopt;
}

std::vector<std::string> right_contributors(const StaircaseShape& s, std::int64_t N,
                                            const Monomial& mono) {
    std::vector<std::string> out;
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();
    const Monomial mx{mono.x, std::vector<std::int32_t>(ny, 0)};
    const Monomial my{std::vector<std::int32_t>(nx, 0), mono.y};
    for (const Composition& d : admissible_compositions(s, N)) {
        const Composition w = half_bubble_sort(d, s);
        const std::int64_t cx =
            key_polynomial(w, nx, Alphabet::x).with_alphabets(nx, ny).coefficient(mx);
        const std::int64_t cy = opposite_atom(d, ny).with_alphabets(nx, ny).coefficient(my);
        if (cx * cy != 0) {
            std::ostringstream os;
            os << "d=" << d.to_string() << " hb=" << w.to_string() << " contributes "
               << cx * cy;
            out.push_back(os.str());
        }
    }
    return out;
}

std::vector<std::string> left_contributors(const StaircaseShape& s, std::int64_t N,
                                           const Monomial& mono) {
    std::vector<std::string> out;
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();
    const Monomial mx{mono.x, std::vector<std::int32_t>(ny, 0)};
    const Monomial my{std::vector<std::int32_t>(nx, 0), mono.y};
    std::map<Composition, std::vector<Composition>> fibers;
    for (const Composition& d : admissible_compositions(s, N))
        fibers[half_bubble_sort(d, s)].push_back(d);
    for (const ShapeArray& a : enumerate_dl(s, N)) {
        const Composition w = a.hor();
        const std::int64_t cx =
            key_polynomial(w, nx, Alphabet::x).with_alphabets(nx, ny).coefficient(mx);
        if (cx == 0) continue;
        auto it = fibers.find(w);
        if (it == fibers.end()) continue;
        for (const Composition& d : it->second) {
            const std::int64_t cy =
                opposite_atom(d, ny).with_alphabets(nx, ny).coefficient(my);
            if (cx * cy != 0) {
                std::ostringstream os;
                os << "A(hor=" << w.to_string() << ") d=" << d.to_string() << " contributes "
                   << cx * cy;
                out.push_back(os.str());
            }
        }
    }
    return out;
}

std::vector<std::string> alternating_contributors(const StaircaseShape& s, std::int64_t N,
                                                  BruhatSense orientation,
                                                  const Monomial& mono) {
    std::vector<std::string> out;
    const std::size_t nx = static_cast<std::size_t>(s.num_rows());
    const std::size_t ny = s.num_columns();
    const Monomial mx{mono.x, std::vector<std::int32_t>(ny, 0)};
    const Monomial my{std::vector<std::int32_t>(nx, 0), mono.y};
    for (const Partition& lam : alternating_partitions(s, N)) {
        const DLPoset poset(s, lam, orientation);
        for (std::size_t a = 0; a < poset.size(); ++a) {
            const std::int64_t cx = key_polynomial(poset.elements()[a].hor(), nx, Alphabet::x)
                                        .with_alphabets(nx, ny)
                                        .coefficient(mx);
            if (cx == 0) continue;
            for (std::size_t b = 0; b < poset.size(); ++b) {
                if (!poset.le(b, a)) continue;
                const std::int64_t cy = opposite_key(poset.elements()[b].vrt(), ny)
                                            .with_alphabets(nx, ny)
                                            .coefficient(my);
                const std::int64_t mu = poset.mobius(b, a);
                if (cx * cy * mu != 0) {
                    std::ostringstream os;
                    os << "lambda=" << lam.to_string()
                       << " A(vrt=" << poset.elements()[a].vrt().to_string()
                       << ") B(vrt=" << poset.elements()[b].vrt().to_string()
                       << ") mu=" << mu << " contributes " << cx * cy * mu;
                    out.push_back(os.str());
                }
            }
        }
    }
    return out;
}

DegreeStatus compare_slice(const StaircaseShape& s, std::int64_t N, IdentityKind kind,
                           const VerifyOptions& opts) {
    DegreeStatus status;
    status.degree = N;

    if (kind == IdentityKind::vdk_cross) {
        status.exact = true;
        for (const ShapeArray& a : enumerate_dl(s, N)) {
            const VdkCharacter ch = vdk_char(a, opts.orientation);
            if (!ch.match) {
                status.exact = false;
                Mismatch mm;
                mm.degree = N;
                if (auto mono = smallest_difference(ch.atom_form, ch.mobius_form)) {
                    mm.monomial = *mono;
                    mm.lhs_coefficient = ch.atom_form.coefficient(*mono);
                    mm.rhs_coefficient = ch.mobius_form.coefficient(*mono);
                }
                mm.contributors.push_back("array hor=" + a.hor().to_string() +
                                          " vrt=" + a.vrt().to_string());
                status.mismatch = std::move(mm);
                break;
            }
        }
        return status;
    }

    const BigradedPolynomial lhs = lhs_degree(s, N, opts.parallel);
    status.lhs_terms = lhs.term_count();
    BigradedPolynomial rhs;
    switch (kind) {
        case IdentityKind::right: rhs = rhs_right(s, N, opts.parallel); break;
        case IdentityKind::left: rhs = rhs_left(s, N, opts.parallel); break;
        case IdentityKind::alternating:
            rhs = rhs_alternating(s, N, opts.orientation, opts.parallel);
            break;
        case IdentityKind::vdk_cross: break;
    }
    if (lhs == rhs) {
        status.exact = true;
        return status;
    }
    status.exact = false;
    Mismatch mm;
    mm.degree = N;
    const auto mono = smallest_difference(lhs, rhs);
    mm.monomial = *mono;
    mm.lhs_coefficient = lhs.coefficient(*mono);
    mm.rhs_coefficient = rhs.coefficient(*mono);
    switch (kind) {
        case IdentityKind::right: mm.contributors = right_contributors(s, N, *mono); break;
        case IdentityKind::left: mm.contributors = left_contributors(s, N, *mono); break;
        case IdentityKind::alternating:
            mm.contributors = alternating_contributors(s, N, opts.orientation, *mono);
            break;
        case IdentityKind::vdk_cross: break;
    }
    status.mismatch = std::move(mm);
    return status;
}

}  // namespace

VerificationReport verify(const StaircaseShape& s, std::int64_t max_degree, IdentityKind kind,
                          const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.shape = s;
    report.identity = kind;
    report.orientation = opts.orientation;
    report.max_degree = max_degree;
    report.parallel = opts.parallel;
    for (std::int64_t N = 0; N <= max_degree; ++N)
        report.degrees.push_back(compare_slice(s, N, kind, opts));
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

}  // namespace staircase

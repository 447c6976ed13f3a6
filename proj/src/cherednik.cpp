#include "staircase/cherednik.hpp"

namespace staircase {

bool cherednik_le(const Composition& a, const Composition& b, std::size_t n, BruhatSense sense) {
    if (a.weight() != b.weight()) return false;
    const Partition ap = dominant_part(a);
    const Partition bp = dominant_part(b);
    if (!dominance_le(ap, bp)) return false;
    if (ap != bp) return true;
    const Permutation ta = min_coset_rep(a, n);
    const Permutation tb = min_coset_rep(b, n);
    return sense == BruhatSense::standard ? bruhat_le(ta, tb) : bruhat_le(tb, ta);
}

bool cherednik_lt(const Composition& a, const Composition& b, std::size_t n, BruhatSense sense) {
    return a != b && cherednik_le(a, b, n, sense);
}

std::string to_string(BruhatSense sense) {
    return sense == BruhatSense::standard ? "standard" : "reversed";
}

}  // namespace staircase

#pragma once

#include <string>

#include "staircase/composition.hpp"
#include "staircase/permutation.hpp"

namespace staircase {

// Tie-break used when the dominant parts coincide. `standard` compares the
// minimal coset representatives directly in Bruhat order; `reversed` flips
// that comparison, matching the containment order of the right-hand
// (opposite) characters.
enum class BruhatSense { standard, reversed };

// a <= b: equal weight, dominant parts comparable in dominance, and on equal
// dominant parts the Bruhat tie-break in the requested sense.
bool cherednik_le(const Composition& a, const Composition& b, std::size_t n,
                  BruhatSense sense = BruhatSense::standard);

bool cherednik_lt(const Composition& a, const Composition& b, std::size_t n,
                  BruhatSense sense = BruhatSense::standard);

std::string to_string(BruhatSense sense);

}  // namespace staircase

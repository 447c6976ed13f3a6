#pragma once

#include <json.hpp>

#include "staircase/arrays.hpp"
#include "staircase/cauchy.hpp"
#include "staircase/composition.hpp"
#include "staircase/permutation.hpp"
#include "staircase/polynomial.hpp"
#include "staircase/sc_poset.hpp"
#include "staircase/serpentine.hpp"
#include "staircase/shape.hpp"

namespace staircase {

// Compositions serialize with trailing zeros stripped; a fixed-length view is
// available where the ambient length matters (chains, weights of a shape).
nlohmann::json to_json(const Composition& c);
nlohmann::json to_json_padded(const Composition& c, std::size_t n);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const StaircaseShape& s);
nlohmann::json to_json(const Cell& c);
nlohmann::json to_json(const ScPoset& p);
nlohmann::json to_json(const ShapeArray& a);
nlohmann::json to_json(const BigradedPolynomial& p);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const VerificationReport& r);

Composition composition_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);
Permutation permutation_from_json(const nlohmann::json& j);
StaircaseShape shape_from_json(const nlohmann::json& j);
ShapeArray array_from_json(const StaircaseShape& s, const nlohmann::json& j);
BigradedPolynomial polynomial_from_json(std::size_t nx, std::size_t ny, const nlohmann::json& j);

}  // namespace staircase

#include "staircase/json_io.hpp"

namespace staircase {

using nlohmann::json;

json to_json(const Composition& c) { return json(c.parts()); }

json to_json_padded(const Composition& c, std::size_t n) { return json(c.padded(n)); }

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Permutation& p) { return json(p.one_line()); }

json to_json(const StaircaseShape& s) { return json(s.columns()); }

json to_json(const Cell& c) { return json::array({c.row, c.col}); }

json to_json(const ScPoset& p) {
    json corners = json::array();
    for (const Cell& c : p.corners()) corners.push_back(to_json(c));
    json edges = json::array();
    for (const auto& [hi, lo] : p.hasse_edges())
        edges.push_back(json::array({to_json(hi), to_json(lo)}));
    return json{{"corners", corners}, {"hasse_edges", edges}};
}

json to_json(const ShapeArray& a) {
    json cells = json::array();
    for (const auto& [cell, v] : a.entries())
        cells.push_back(json::array({cell.row, cell.col, v}));
    return json{{"cells", cells}};
}

json to_json(const BigradedPolynomial& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms())
        out.push_back(json{{"x", m.x}, {"y", m.y}, {"c", c}});
    return out;
}

json to_json(const Monomial& m) { return json{{"x", m.x}, {"y", m.y}}; }

json to_json(const VerificationReport& r) {
    json degrees = json::array();
    for (const auto& d : r.degrees) {
        json entry{{"degree", d.degree},
                   {"status", d.exact ? "exact" : "mismatch"},
                   {"lhs_terms", d.lhs_terms}};
        if (d.mismatch) {
            entry["mismatch"] = json{{"monomial", to_json(d.mismatch->monomial)},
                                     {"lhs", d.mismatch->lhs_coefficient},
                                     {"rhs", d.mismatch->rhs_coefficient},
                                     {"contributors", d.mismatch->contributors}};
        }
        degrees.push_back(std::move(entry));
    }
    return json{{"shape", to_json(r.shape)},
                {"identity", identity_name(r.identity)},
                {"orientation", to_string(r.orientation)},
                {"max_degree", r.max_degree},
                {"parallel", r.parallel},
                {"all_exact", r.all_exact()},
                {"degrees", std::move(degrees)},
                {"wall_ms", r.wall_ms}};
}

Composition composition_from_json(const json& j) {
    return Composition(j.get<std::vector<std::int64_t>>());
}

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<std::int64_t>>());
}

Permutation permutation_from_json(const json& j) {
    return Permutation(j.get<std::vector<int>>());
}

StaircaseShape shape_from_json(const json& j) {
    return StaircaseShape::validate(j.get<std::vector<std::int64_t>>());
}

ShapeArray array_from_json(const StaircaseShape& s, const json& j) {
    ShapeArray a(s);
    for (const auto& cell : j.at("cells"))
        a.set({cell.at(0).get<std::int64_t>(), cell.at(1).get<std::int64_t>()},
              cell.at(2).get<std::int64_t>());
    return a;
}

BigradedPolynomial polynomial_from_json(std::size_t nx, std::size_t ny, const json& j) {
    BigradedPolynomial p(nx, ny);
    for (const auto& term : j) {
        Monomial m{term.at("x").get<std::vector<std::int32_t>>(),
                   term.at("y").get<std::vector<std::int32_t>>()};
        p.add_term(m, term.at("c").get<std::int64_t>());
    }
    return p;
}

}  // namespace staircase

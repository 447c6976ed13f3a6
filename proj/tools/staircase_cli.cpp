#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "staircase/cauchy.hpp"
#include "staircase/json_io.hpp"

using namespace staircase;
using nlohmann::json;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string json_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}))
        ->capture_default_str();
    cmd->add_option("--json", out.json_path, "Also write the JSON result to this path");
}

// stdout gets the selected format; --json always receives the JSON document.
void emit(const OutputOptions& out, const json& doc, const std::string& pretty,
          const std::string& tsv) {
    if (!out.json_path.empty()) {
        std::ofstream f(out.json_path);
        if (!f) throw std::runtime_error("cannot open " + out.json_path);
        f << doc.dump(2) << '\n';
    }
    if (out.format == "json")
        std::cout << doc.dump(2) << '\n';
    else if (out.format == "pretty")
        std::cout << pretty;
    else
        std::cout << tsv;
}

std::string poly_tsv(const BigradedPolynomial& p) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t k = 0; k < m.x.size(); ++k) os << m.x[k] << '\t';
        for (std::size_t k = 0; k < m.y.size(); ++k) os << m.y[k] << '\t';
        os << c << '\n';
    }
    return os.str();
}

std::string vec_text(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

Composition parse_composition(const std::string& text) {
    if (text.empty()) return Composition{};
    std::vector<std::int64_t> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(std::stoll(item));
    return Composition(std::move(entries));
}

BruhatSense parse_sense(const std::string& name) {
    return name == "standard" ? BruhatSense::standard : BruhatSense::reversed;
}

json dl_array_json(const ShapeArray& a) {
    json entry = to_json(a);
    entry["hor"] = to_json_padded(a.hor(), static_cast<std::size_t>(a.shape().num_rows()));
    entry["vrt"] = to_json_padded(a.vrt(), a.shape().num_columns());
    return entry;
}

int run(int argc, char** argv) {
    CLI::App app{"Staircase-shape combinatorics: corner posets, serpentines, half-bubble"
                 " sort, DL-dense arrays, key polynomials and product expansions"};
    app.require_subcommand(1);

    std::string shape_text, lambda_text, d_text;
    std::int64_t degree = -1, max_degree = 3, n_vars = 0;
    std::int64_t agl_n = 0, agl_p = 0, agl_q = 0, max_entry = 3;
    std::string identity = "all";
    std::string orientation = "reversed";
    bool parallel = false;
    OutputOptions out;

    auto* corners_cmd = app.add_subcommand("corners", "Staircase-corner poset of a shape");
    corners_cmd->add_option("--shape", shape_text, "Column lengths, e.g. 2,4,4,4,5,5")
        ->required();
    add_output_flags(corners_cmd, out);

    auto* transpose_cmd = app.add_subcommand("transpose", "Transpose a shape");
    transpose_cmd->add_option("--shape", shape_text)->required();
    add_output_flags(transpose_cmd, out);

    auto* serp_cmd = app.add_subcommand("serpentines", "Enumerate the serpentine set");
    serp_cmd->add_option("--lambda", lambda_text, "Base composition")->required();
    serp_cmd->add_option("--d", d_text, "Box count")->required();
    serp_cmd->add_option("--n", n_vars, "Ambient length")->required();
    add_output_flags(serp_cmd, out);

    auto* hb_cmd = app.add_subcommand("hb", "Half-bubble-sort of a composition");
    hb_cmd->add_option("--shape", shape_text)->required();
    hb_cmd->add_option("--d", d_text, "Composition, one entry per column")->required();
    add_output_flags(hb_cmd, out);

    auto* dl_cmd = app.add_subcommand("dl", "DL-dense arrays by degree or entry multiset");
    dl_cmd->add_option("--shape", shape_text)->required();
    dl_cmd->add_option("--degree", degree, "Total degree");
    dl_cmd->add_option("--lambda", lambda_text, "Entry multiset (partition)");
    dl_cmd->add_option("--orientation", orientation, "Bruhat tie-break for the poset")
        ->check(CLI::IsMember({"reversed", "standard"}));
    add_output_flags(dl_cmd, out);

    auto* key_cmd = app.add_subcommand("key", "Key polynomial of a composition");
    key_cmd->add_option("--lambda", lambda_text)->required();
    key_cmd->add_option("--n", n_vars, "Number of variables")->required();
    add_output_flags(key_cmd, out);

    auto* atom_cmd = app.add_subcommand("atom", "Demazure atom of a composition");
    atom_cmd->add_option("--lambda", lambda_text)->required();
    atom_cmd->add_option("--n", n_vars)->required();
    add_output_flags(atom_cmd, out);

    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial via tableaux");
    schur_cmd->add_option("--lambda", lambda_text, "Partition")->required();
    schur_cmd->add_option("--n", n_vars)->required();
    add_output_flags(schur_cmd, out);

    auto* vdk_cmd = app.add_subcommand(
        "vdk-char", "Cross-check the two routes to the generalized module characters");
    vdk_cmd->add_option("--shape", shape_text)->required();
    vdk_cmd->add_option("--degree", degree, "Array degree")->required();
    vdk_cmd->add_option("--orientation", orientation)
        ->check(CLI::IsMember({"reversed", "standard"}));
    add_output_flags(vdk_cmd, out);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check the product expansions degree by degree, exactly");
    verify_cmd->add_option("--shape", shape_text)->required();
    verify_cmd->add_option("--identity", identity, "right|left|alt|vdk|all")
        ->check(CLI::IsMember({"right", "left", "alt", "vdk", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-degree", max_degree)->capture_default_str();
    verify_cmd->add_option("--orientation", orientation)
        ->check(CLI::IsMember({"reversed", "standard"}));
    verify_cmd->add_flag("--parallel", parallel, "Use the OpenMP evaluators");
    add_output_flags(verify_cmd, out);

    auto* agl_cmd = app.add_subcommand(
        "agl-check", "Compare the elimination-window formula against half-bubble-sort");
    agl_cmd->add_option("--n", agl_n)->required();
    agl_cmd->add_option("--p", agl_p)->required();
    agl_cmd->add_option("--q", agl_q)->required();
    agl_cmd->add_option("--d", d_text, "Single composition to check (otherwise sweep)");
    agl_cmd->add_option("--max-entry", max_entry, "Sweep bound")->capture_default_str();
    add_output_flags(agl_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (corners_cmd->parsed()) {
        const auto s = parse_shape(shape_text);
        const auto poset = staircase_corners(s);
        json doc{{"shape", to_json(s)}, {"poset", to_json(poset)}};
        std::ostringstream pretty, tsv;
        pretty << "shape " << s.to_string() << "\ncorners:";
        for (const Cell& c : poset.corners()) pretty << ' ' << to_string(c);
        pretty << "\nhasse edges:";
        for (const auto& [hi, lo] : poset.hasse_edges())
            pretty << ' ' << to_string(hi) << '-' << to_string(lo);
        pretty << '\n';
        for (const Cell& c : poset.corners()) tsv << c.row << '\t' << c.col << '\n';
        emit(out, doc, pretty.str(), tsv.str());
        return 0;
    }

    if (transpose_cmd->parsed()) {
        const auto s = parse_shape(shape_text);
        const auto t = s.transpose();
        json doc{{"shape", to_json(s)}, {"transpose", to_json(t)}};
        std::ostringstream tsv;
        for (std::size_t j = 0; j < t.columns().size(); ++j)
            tsv << (j ? "\t" : "") << t.columns()[j];
        tsv << '\n';
        emit(out, doc, t.to_string() + "\n", tsv.str());
        return 0;
    }

    if (serp_cmd->parsed()) {
        const auto lambda = parse_composition(lambda_text);
        const auto d = std::stoll(d_text);
        const auto n = static_cast<std::size_t>(n_vars);
        const auto members = serpentines(lambda, d, n);
        json list = json::array();
        std::ostringstream pretty, tsv;
        for (const auto& mu : members) {
            list.push_back(to_json_padded(mu, n));
            pretty << vec_text(mu.padded(n)) << '\n';
            const auto v = mu.padded(n);
            for (std::size_t k = 0; k < n; ++k) tsv << (k ? "\t" : "") << v[k];
            tsv << '\n';
        }
        json doc{{"lambda", to_json_padded(lambda, n)},
                 {"d", d},
                 {"n", n_vars},
                 {"serpentines", std::move(list)}};
        emit(out, doc, pretty.str(), tsv.str());
        return 0;
    }

    if (hb_cmd->parsed()) {
        const auto s = parse_shape(shape_text);
        const auto d = parse_composition(d_text);
        const auto chain = iterated_chain(d, s);
        json chain_json = json::array();
        std::ostringstream pretty, tsv;
        for (std::size_t j = 1; j <= chain.size(); ++j) {
            const auto padded = chain[j - 1].padded(
                static_cast<std::size_t>(s.column_length(j)));
            chain_json.push_back(json(padded));
            pretty << "mu(" << j << ") = " << vec_text(padded) << '\n';
            for (std::size_t k = 0; k < padded.size(); ++k) tsv << (k ? "\t" : "") << padded[k];
            tsv << '\n';
        }
        const auto hb = chain.back().padded(static_cast<std::size_t>(s.num_rows()));
        pretty << "hb = " << vec_text(hb) << '\n';
        json doc{{"shape", to_json(s)},
                 {"d", to_json_padded(d, s.num_columns())},
                 {"chain", std::move(chain_json)},
                 {"hb", json(hb)}};
        emit(out, doc, pretty.str(), tsv.str());
        return 0;
    }

    if (dl_cmd->parsed()) {
        const auto s = parse_shape(shape_text);
        json doc{{"shape", to_json(s)}};
        std::ostringstream pretty, tsv;
        auto describe = [&](const ShapeArray& a) {
            pretty << "hor=" << vec_text(a.hor().padded(
                          static_cast<std::size_t>(s.num_rows())))
                   << " vrt=" << vec_text(a.vrt().padded(s.num_columns())) << " cells:";
            for (const auto& [cell, v] : a.entries())
                pretty << ' ' << to_string(cell) << '=' << v;
            pretty << '\n';
            bool first = true;
            for (const auto& [cell, v] : a.entries()) {
                tsv << (first ? "" : ";") << cell.row << ',' << cell.col << ',' << v;
                first = false;
            }
            tsv << '\n';
        };
        if (!lambda_text.empty()) {
            const auto lam = dominant_part(parse_composition(lambda_text));
            const DLPoset poset(s, lam, parse_sense(orientation));
            json arrays = json::array();
            for (const auto& a : poset.elements()) {
                arrays.push_back(dl_array_json(a));
                describe(a);
            }
            json edges = json::array();
            for (const auto& [hi, lo] : poset.hasse_edges())
                edges.push_back(json::array({hi, lo}));
            doc["lambda"] = to_json(lam);
            doc["orientation"] = to_string(poset.sense());
            doc["arrays"] = std::move(arrays);
            doc["hasse_edges"] = std::move(edges);
        } else {
            if (degree < 0) throw CLI::ValidationError("dl", "need --degree or --lambda");
            json arrays = json::array();
            for (const auto& a : enumerate_dl(s, degree)) {
                arrays.push_back(dl_array_json(a));
                describe(a);
            }
            doc["degree"] = degree;
            doc["arrays"] = std::move(arrays);
        }
        emit(out, doc, pretty.str(), tsv.str());
        return 0;
    }

    if (key_cmd->parsed() || atom_cmd->parsed() || schur_cmd->parsed()) {
        const auto n = static_cast<std::size_t>(n_vars);
        BigradedPolynomial p;
        if (key_cmd->parsed())
            p = key_polynomial(parse_composition(lambda_text), n, Alphabet::x);
        else if (atom_cmd->parsed())
            p = demazure_atom(parse_composition(lambda_text), n, Alphabet::x);
        else
            p = schur(dominant_part(parse_composition(lambda_text)), n, Alphabet::x);
        emit(out, to_json(p), p.to_string() + "\n", poly_tsv(p));
        return 0;
    }

    if (vdk_cmd->parsed()) {
        const auto s = parse_shape(shape_text);
        const auto sense = parse_sense(orientation);
        json arrays = json::array();
        std::ostringstream pretty, tsv;
        bool all_match = true;
        for (const auto& a : enumerate_dl(s, degree)) {
            const auto ch = vdk_char(a, sense);
            all_match = all_match && ch.match;
            json entry = dl_array_json(a);
            entry["atom_form"] = to_json(ch.atom_form);
            entry["mobius_form"] = to_json(ch.mobius_form);
            entry["match"] = ch.match;
            arrays.push_back(std::move(entry));
            pretty << (ch.match ? "match " : "MISMATCH ") << "hor="
                   << vec_text(a.hor().padded(static_cast<std::size_t>(s.num_rows())))
                   << " char=" << ch.atom_form.to_string() << '\n';
            tsv << (ch.match ? 1 : 0) << '\t' << ch.atom_form.to_string() << '\n';
        }
        json doc{{"shape", to_json(s)},
                 {"degree", degree},
                 {"orientation", to_string(sense)},
                 {"all_match", all_match},
                 {"arrays", std::move(arrays)}};
        emit(out, doc, pretty.str(), tsv.str());
        return all_match ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
        const auto s = parse_shape(shape_text);
        double slice_estimate = 1.0;  // multisets of max_degree cells
        for (std::int64_t k = 1; k <= max_degree; ++k)
            slice_estimate *= static_cast<double>(s.cell_count() + k - 1) /
                              static_cast<double>(k);
        if (slice_estimate > 1e7)
            std::cerr << "warning: about " << static_cast<long long>(slice_estimate)
                      << " arrays in the top degree slice; this will be slow\n";
        VerifyOptions opts{parse_sense(orientation), parallel};
        std::vector<IdentityKind> kinds;
        if (identity == "right") kinds = {IdentityKind::right};
        else if (identity == "left") kinds = {IdentityKind::left};
        else if (identity == "alt") kinds = {IdentityKind::alternating};
        else if (identity == "vdk") kinds = {IdentityKind::vdk_cross};
        else kinds = {IdentityKind::right, IdentityKind::left, IdentityKind::alternating};

        json reports = json::array();
        std::ostringstream pretty, tsv;
        bool all_ok = true;
        for (const auto kind : kinds) {
            const auto report = verify(s, max_degree, kind, opts);
            all_ok = all_ok && report.all_exact();
            reports.push_back(to_json(report));
            for (const auto& deg : report.degrees) {
                pretty << (deg.exact ? "PASS" : "FAIL") << ' ' << identity_name(kind)
                       << " shape " << s.to_string() << " degree " << deg.degree;
                if (deg.mismatch)
                    pretty << " first differing coefficient lhs=" << deg.mismatch->lhs_coefficient
                           << " rhs=" << deg.mismatch->rhs_coefficient;
                pretty << '\n';
                tsv << identity_name(kind) << '\t' << deg.degree << '\t'
                    << (deg.exact ? "exact" : "mismatch") << '\n';
            }
        }
        // stdout JSON omits the wall clock so identical runs are byte-identical
        json doc = reports;
        if (!out.json_path.empty()) {
            std::ofstream f(out.json_path);
            if (!f) throw std::runtime_error("cannot open " + out.json_path);
            f << doc.dump(2) << '\n';
        }
        json scrubbed = doc;
        for (auto& r : scrubbed) r.erase("wall_ms");
        OutputOptions stdout_only = out;
        stdout_only.json_path.clear();
        emit(stdout_only, scrubbed, pretty.str(), tsv.str());
        return all_ok ? 0 : 1;
    }

    if (agl_cmd->parsed()) {
        const auto s = agl_shape(agl_n, agl_p, agl_q);
        std::ostringstream pretty, tsv;
        json doc{{"n", agl_n}, {"p", agl_p}, {"q", agl_q}, {"shape", to_json(s)},
                 {"identity", "agl"}};
        bool all_match = true;
        json cases = json::array();
        auto check_one = [&](const Composition& d) {
            const auto prime = agl_prime(d, agl_n, agl_p, agl_q);
            const auto hb = half_bubble_sort(d, s);
            const bool match = prime == hb;
            all_match = all_match && match;
            json entry{{"d", to_json_padded(d, static_cast<std::size_t>(agl_p))},
                       {"agl", to_json_padded(prime, static_cast<std::size_t>(agl_q))},
                       {"hb", to_json_padded(hb, static_cast<std::size_t>(s.num_rows()))},
                       {"match", match}};
            cases.push_back(std::move(entry));
            pretty << (match ? "PASS" : "FAIL") << " d="
                   << vec_text(d.padded(static_cast<std::size_t>(agl_p))) << " -> "
                   << vec_text(prime.padded(static_cast<std::size_t>(agl_q))) << '\n';
            tsv << vec_text(d.padded(static_cast<std::size_t>(agl_p))) << '\t' << (match ? 1 : 0)
                << '\n';
        };
        if (!d_text.empty()) {
            check_one(parse_composition(d_text));
        } else {
            std::vector<std::int64_t> entries(static_cast<std::size_t>(agl_p), 0);
            for (;;) {
                check_one(Composition(entries));
                std::size_t i = 0;
                while (i < entries.size() && entries[i] == max_entry) entries[i++] = 0;
                if (i == entries.size()) break;
                ++entries[i];
            }
        }
        doc["cases"] = std::move(cases);
        doc["all_match"] = all_match;
        emit(out, doc, pretty.str(), tsv.str());
        return all_match ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

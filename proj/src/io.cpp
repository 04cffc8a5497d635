#include "relhull/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace relhull {

namespace {

using nlohmann::ordered_json;

std::vector<std::uint32_t> parse_u32_list(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) fail(Err::ParseError, where + " must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) fail(Err::ParseError, where + " entries must be nonnegative integers");
        out.push_back(v.get<std::uint32_t>());
    }
    return out;
}

FieldPtr parse_field(const ordered_json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("ell"))
        fail(Err::ParseError, "field must be an object with p and ell");
    if (!j["p"].is_number_unsigned() || !j["ell"].is_number_unsigned())
        fail(Err::ParseError, "field p and ell must be nonnegative integers");
    std::uint32_t p = j["p"].get<std::uint32_t>();
    std::uint32_t ell = j["ell"].get<std::uint32_t>();
    if (j.contains("modulus")) return Field::make(p, ell, parse_u32_list(j["modulus"], "field modulus"));
    return Field::make(p, ell);
}

MatrixGF parse_matrix(const FieldPtr& field, const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(Err::ParseError, where + " must be a nonempty array of rows");
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& r : j) rows.push_back(parse_u32_list(r, where + " row"));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) fail(Err::ParseError, where + " rows have unequal lengths");
    return MatrixGF::from_codes(field, rows);
}

CodePairFile parse_inner(const ordered_json& j) {
    if (!j.is_object()) fail(Err::ParseError, "top level must be an object");
    if (!j.contains("field")) fail(Err::ParseError, "missing field section");
    CodePairFile f;
    f.field = parse_field(j["field"]);

    if (!j.contains("codes") || !j["codes"].is_array())
        fail(Err::ParseError, "codes must be an array of named matrices");
    for (const auto& c : j["codes"]) {
        if (!c.is_object() || !c.contains("name") || !c.contains("rows") || !c["name"].is_string())
            fail(Err::ParseError, "each code needs a name and rows");
        f.codes.emplace_back(c["name"].get<std::string>(),
                             parse_matrix(f.field, c["rows"], "code " + c["name"].get<std::string>()));
    }

    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_object() || !g.contains("factors") || !g["factors"].is_array())
            fail(Err::ParseError, "grid must be an object with a factors array");
        std::vector<std::vector<std::uint32_t>> factors;
        for (const auto& a : g["factors"]) factors.push_back(parse_u32_list(a, "grid factor"));
        f.grid = CartesianGrid(f.field, factors);
    }

    if (j.contains("exponent_sets")) {
        if (!j["exponent_sets"].is_array()) fail(Err::ParseError, "exponent_sets must be an array");
        for (const auto& s : j["exponent_sets"]) {
            if (!s.is_object() || !s.contains("name") || !s.contains("m") || !s.contains("exponents") ||
                !s["name"].is_string() || !s["m"].is_number_unsigned())
                fail(Err::ParseError, "each exponent set needs a name, arity m, and exponents");
            std::vector<Exponent> exps;
            for (const auto& e : s["exponents"])
                exps.push_back(parse_u32_list(e, "exponent in set " + s["name"].get<std::string>()));
            f.exponent_sets.emplace_back(s["name"].get<std::string>(),
                                         ExponentSet(s["m"].get<std::size_t>(), exps));
        }
    }
    return f;
}

bool all_numbers(const ordered_json& j) {
    for (const auto& v : j)
        if (!v.is_number()) return false;
    return true;
}

// dump(2) with purely numeric arrays kept on one line, so matrix rows,
// grid factors and exponent tuples stay readable.
void write_compact(const ordered_json& j, std::string& out, std::size_t indent) {
    std::string pad(indent, ' ');
    std::string pad2(indent + 2, ' ');
    if (j.is_object()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad2 + "\"" + key + "\": ";
            write_compact(value, out, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array() && all_numbers(j)) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) out += ", ";
            out += j[i].dump();
        }
        out += "]";
    } else if (j.is_array()) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad2;
            write_compact(j[i], out, indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

std::string compact_dump(const ordered_json& j) {
    std::string out;
    write_compact(j, out, 0);
    return out;
}

ordered_json matrix_rows(const MatrixGF& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

ordered_json map_json(const MonomialMap& m) {
    return ordered_json{{"lambda", m.lambda()}, {"sigma", m.sigma()}};
}

}  // namespace

CodePairFile parse_code_pair(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Err::ParseError, "text is not valid JSON");
    try {
        return parse_inner(j);
    } catch (const Error& e) {
        if (e.code() == Err::ParseError) throw;
        // semantic defects in the file content surface uniformly as parse errors
        fail(Err::ParseError, e.what());
    }
}

std::string serialize_code_pair(const CodePairFile& f) {
    ordered_json j;
    j["field"] = ordered_json{{"p", f.field->p()}, {"ell", f.field->ell()}, {"modulus", f.field->modulus()}};
    j["codes"] = ordered_json::array();
    for (const auto& [name, m] : f.codes)
        j["codes"].push_back(ordered_json{{"name", name}, {"rows", matrix_rows(m)}});
    if (f.grid) j["grid"] = ordered_json{{"factors", f.grid->factors()}};
    if (!f.exponent_sets.empty()) {
        j["exponent_sets"] = ordered_json::array();
        for (const auto& [name, s] : f.exponent_sets)
            j["exponent_sets"].push_back(
                ordered_json{{"name", name}, {"m", s.m()}, {"exponents", s.exponents()}});
    }
    return compact_dump(j) + "\n";
}

CodePairFile load_code_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code_pair(buf.str());
}

const MatrixGF& find_code(const CodePairFile& f, const std::string& name) {
    for (const auto& [n, m] : f.codes)
        if (n == name) return m;
    fail(Err::ParseError, "file has no code named " + name);
}

const ExponentSet& find_exponent_set(const CodePairFile& f, const std::string& name) {
    for (const auto& [n, s] : f.exponent_sets)
        if (n == name) return s;
    fail(Err::ParseError, "file has no exponent set named " + name);
}

std::string to_json(const HullReport& r) {
    return compact_dump(ordered_json{{"dim_hull", r.dim_hull},
                                     {"lower_bound", r.lower_bound},
                                     {"upper_bound", r.upper_bound},
                                     {"rank_product", r.rank_product},
                                     {"galois_e", r.galois_e}});
}

std::string to_json(const ReductionTrace& t) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : t.steps) {
        ordered_json step;
        if (s.kind == WitnessKind::Scaling) {
            step["kind"] = "scaling";
            step["coordinate"] = s.coord_i;
        } else {
            step["kind"] = "transposition";
            step["coordinates"] = std::vector<std::size_t>{s.coord_i, s.coord_j};
        }
        step["scalar"] = s.scalar;
        step["hull_dim_after"] = s.hull_dim_after;
        steps.push_back(step);
    }
    ordered_json j;
    j["steps"] = steps;
    if (t.increase) {
        j["increase"] = map_json(*t.increase);
        j["dim_after_increase"] = t.dim_after_increase;
    }
    j["composed"] = map_json(t.composed);
    j["final_code"] = matrix_rows(t.final_code.gen());
    return compact_dump(j);
}

std::string to_json(const CSSParams& p) {
    return compact_dump(ordered_json{{"n", p.n},    {"k", p.kappa}, {"d", p.delta},
                        {"c", p.c},    {"q", p.q},     {"pure", p.pure},
                        {"singleton_slack", p.singleton_slack}});
}

std::string to_json(const DiagonalMaxReport& r) {
    return compact_dump(ordered_json{{"achieved", r.achieved},
                        {"bound_maxwt", r.bound_maxwt},
                        {"bound_anticode", r.bound_anticode},
                        {"exact", r.exact},
                        {"best_lambda", r.best_lambda}});
}

std::string to_json(const TwistReport& r) {
    return compact_dump(ordered_json{{"lambda", r.lambda}, {"verified", r.verified}});
}

std::string to_json(const AugmentReport& r) {
    return compact_dump(ordered_json{{"predicted", r.predicted},
                                     {"dim_before", r.dim_before},
                                     {"dim_after", r.dim_after},
                                     {"c1_rows", matrix_rows(r.c1_aug.gen())},
                                     {"c2_rows", matrix_rows(r.c2_aug.gen())}});
}

}  // namespace relhull

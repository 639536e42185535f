#include <set>

#include "centorb/cli.hpp"
#include "centorb/error.hpp"

namespace centorb::cli {

namespace {

Rational rational_field(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(v.get<std::int64_t>())));
    }
    throw InputError(where + ": expected a rational string such as \"3/4\" or an integer, got " + v.dump());
}

std::size_t positive_field(const nlohmann::json& v, const std::string& where) {
    const bool ok = v.is_number_unsigned() ? v.get<std::uint64_t>() >= 1
                                           : v.is_number_integer() && v.get<std::int64_t>() >= 1;
    if (!ok) throw InputError(where + ": expected a positive integer, got " + v.dump());
    return v.get<std::size_t>();
}

Matrix parse_matrix(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty()) throw InputError("matrix: expected a non-empty array of rows");
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "matrix[" + std::to_string(i) + "]";
        if (!rows[i].is_array()) throw InputError(where + ": expected an array");
        if (rows[i].size() != n)
            throw InputError(where + ": has " + std::to_string(rows[i].size()) + " entries, matrix must be square (" +
                             std::to_string(n) + "x" + std::to_string(n) + ")");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rational_field(rows[i][j], where + "[" + std::to_string(j) + "]");
    }
    return m;
}

JordanType parse_jordan(const nlohmann::json& list) {
    if (!list.is_array() || list.empty()) throw InputError("jordan: expected a non-empty array of eigenvalue entries");
    JordanType type;
    std::set<Eigenvalue> seen;
    for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string where = "jordan[" + std::to_string(e) + "]";
        const auto& entry = list[e];
        if (!entry.is_object()) throw InputError(where + ": expected an object");
        for (const auto& [key, _] : entry.items())
            if (key != "eigenvalue" && key != "blocks") throw InputError(where + ": unknown field \"" + key + "\"");
        if (!entry.contains("eigenvalue") || !entry["eigenvalue"].is_string())
            throw InputError(where + ".eigenvalue: expected a string");
        const auto ev = Eigenvalue::parse(entry["eigenvalue"].get<std::string>());
        if (!seen.insert(ev).second) throw InputError(where + ".eigenvalue: duplicate eigenvalue " + ev.str());
        if (!entry.contains("blocks") || !entry["blocks"].is_array() || entry["blocks"].empty())
            throw InputError(where + ".blocks: expected a non-empty array of [size, multiplicity] pairs");
        std::set<std::size_t> sizes;
        const auto& blocks = entry["blocks"];
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const std::string bw = where + ".blocks[" + std::to_string(b) + "]";
            if (!blocks[b].is_array() || blocks[b].size() != 2) throw InputError(bw + ": expected [size, multiplicity]");
            const auto size = positive_field(blocks[b][0], bw + "[0]");
            const auto mult = positive_field(blocks[b][1], bw + "[1]");
            if (!sizes.insert(size).second)
                throw InputError(bw + ": block size " + std::to_string(size) + " listed twice for eigenvalue " + ev.str());
            type.add(ev, size, mult);
        }
    }
    return type;
}

}  // namespace

OperatorSpec parse_operator_spec(const nlohmann::json& doc) {
    if (!doc.is_object()) throw InputError("operator spec: expected a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "matrix" && key != "jordan") throw InputError("operator spec: unknown field \"" + key + "\"");
    const bool has_matrix = doc.contains("matrix");
    const bool has_jordan = doc.contains("jordan");
    if (has_matrix == has_jordan) throw InputError("operator spec: exactly one of \"matrix\" or \"jordan\" is required");
    OperatorSpec spec;
    if (has_matrix) {
        spec.matrix = parse_matrix(doc["matrix"]);
        spec.type = jordan_type(*spec.matrix);
    } else {
        spec.type = parse_jordan(doc["jordan"]);
    }
    return spec;
}

OperatorSpec parse_operator_spec_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("operator spec is not valid JSON: ") + e.what());
    }
    return parse_operator_spec(doc);
}

Matrix parse_vector(std::string_view text) {
    std::vector<Rational> entries;
    std::size_t i = 0;
    while (true) {
        const auto comma = text.find(',');
        const auto tok = text.substr(0, comma);
        try {
            entries.push_back(parse_rational(tok));
        } catch (const InputError& e) {
            throw InputError("--vector entry " + std::to_string(i) + ": " + e.what());
        }
        ++i;
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Matrix::column(std::move(entries));
}

Json jordan_type_json(const JordanType& type) {
    Json out = Json::array();
    for (const auto& [ev, list] : type.blocks()) {
        Json blocks = Json::array();
        for (const auto& b : list) blocks.push_back(Json::array({b.size, b.multiplicity}));
        out.push_back(Json{{"eigenvalue", ev.str()}, {"blocks", std::move(blocks)}});
    }
    return out;
}

}  // namespace centorb::cli

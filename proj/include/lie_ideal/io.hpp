#pragma once

// JSON encoding. Scalars are integers (reduced residues) in prime
// characteristic and "num/den" strings (or "num" for integers) in
// characteristic 0.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "format.hpp"
#include "ideal.hpp"
#include "lie_algebra.hpp"

namespace lie_ideal::io {

using nlohmann::json;

inline json scalar_to_json(const Scalar& s) {
    if (s.characteristic().is_zero()) return s.to_string();
    return s.residue();
}

inline Scalar scalar_from_json(const json& j, Characteristic ch) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Scalar(ch, BigInt(j.get<std::uint64_t>()));
        return Scalar(ch, j.get<long long>());
    }
    if (!j.is_string()) throw ParseError("coordinate must be an integer or a \"num/den\" string");
    const std::string text = j.get<std::string>();
    try {
        const auto slash = text.find('/');
        BigInt num(text.substr(0, slash));
        if (slash == std::string::npos) return Scalar(ch, num);
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
        if (ch.is_zero()) return Scalar::fraction(num, den);
        return Scalar(ch, num) / Scalar(ch, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw ParseError("malformed scalar \"" + text + "\"");
    }
}

inline json coords_to_json(const CoordVector& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

inline json elements_to_json(const std::vector<AlgebraElement>& elements) {
    json out = json::array();
    for (const auto& e : elements) out.push_back(coords_to_json(e.coords()));
    return out;
}

inline json elements_to_text(const std::vector<AlgebraElement>& elements) {
    json out = json::array();
    for (const auto& e : elements) out.push_back(format_element(e));
    return out;
}

/// Coordinate vectors, e.g. [[1,0,0,1],[0,1,0,0]], as elements of `L`.
inline std::vector<AlgebraElement> elements_from_json(const json& j, const LieAlgebra& L) {
    if (!j.is_array()) throw ParseError("expected an array of coordinate vectors");
    std::vector<AlgebraElement> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError("each coordinate vector must be an array");
        if (row.size() != L.dimension())
            throw GeneratorError("coordinate vector of length " + std::to_string(row.size()) + " in an algebra of dimension " +
                                 std::to_string(L.dimension()));
        std::vector<Scalar> entries;
        for (const auto& x : row) entries.push_back(scalar_from_json(x, L.characteristic()));
        out.emplace_back(CoordVector(L.characteristic(), std::move(entries)));
    }
    return out;
}

inline std::vector<AlgebraElement> elements_from_json_text(const std::string& text, const LieAlgebra& L) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return elements_from_json(j, L);
}

inline json trace_to_json(const IdealResult& r) {
    json out = json::array();
    for (const auto& t : r.trace)
        out.push_back({{"depth", t.depth},
                       {"dimension", t.dimension},
                       {"spanning_set", elements_to_json(t.spanning_set)},
                       {"spanning_set_text", elements_to_text(t.spanning_set)}});
    return out;
}

inline json ideal_to_json(const IdealResult& r) {
    return {{"generators", elements_to_json(r.generators)},
            {"basis", elements_to_json(r.basis)},
            {"basis_text", elements_to_text(r.basis)},
            {"dimension", r.dimension}};
}

/// Dense array indexed [i][j][k] holding c_ij^k.
inline json structure_constants_to_json(const LieAlgebra& L) {
    const std::size_t n = L.dimension();
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(scalar_to_json(L.structure_constant(i, j, k)));
            row.push_back(std::move(cell));
        }
        out.push_back(std::move(row));
    }
    return out;
}

/// {command, algebra, char, result, trace}
inline json envelope(const std::string& command, const LieAlgebra& L, json result, json trace = nullptr) {
    return {{"command", command},
            {"algebra", L.name()},
            {"char", L.characteristic().value()},
            {"result", std::move(result)},
            {"trace", std::move(trace)}};
}

}  // namespace lie_ideal::io

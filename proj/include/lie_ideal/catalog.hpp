#pragma once

// Standard matrix Lie algebras and the JSON algebra-definition loader.
//
// File format:
//   {"name": "gl2", "matrix_size": 2, "basis": [[[1,0],[0,0]], ...]}
// Entries are integers; they are reduced into the characteristic supplied at
// load time, so one file serves every characteristic.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "lie_algebra.hpp"

namespace lie_ideal::catalog {

/// All m x m matrices: E_ij in row-major order.
inline LieAlgebra gl(std::size_t m, Characteristic ch) {
    if (m == 0) throw DimensionMismatch("gl needs matrix size >= 1");
    std::vector<MatrixRep> basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) basis.push_back(MatrixRep::elementary(ch, m, i, j));
    return LieAlgebra::from_matrices("gl" + std::to_string(m), ch, std::move(basis));
}

/// Trace-zero matrices. Off-diagonal E_ij in row-major order, then
/// E_ii - E_{i+1,i+1}.
inline LieAlgebra sl(std::size_t m, Characteristic ch) {
    if (m < 2) throw DimensionMismatch("sl needs matrix size >= 2");
    std::vector<MatrixRep> basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) basis.push_back(MatrixRep::elementary(ch, m, i, j));
    for (std::size_t i = 0; i + 1 < m; ++i)
        basis.push_back(MatrixRep::elementary(ch, m, i, i) - MatrixRep::elementary(ch, m, i + 1, i + 1));
    return LieAlgebra::from_matrices("sl" + std::to_string(m), ch, std::move(basis));
}

/// E_ij with i <= j.
inline LieAlgebra upper_triangular(std::size_t m, Characteristic ch) {
    if (m == 0) throw DimensionMismatch("ut needs matrix size >= 1");
    std::vector<MatrixRep> basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) basis.push_back(MatrixRep::elementary(ch, m, i, j));
    return LieAlgebra::from_matrices("ut" + std::to_string(m), ch, std::move(basis));
}

/// E_ij with i < j. Needs m >= 2, since the m = 1 algebra is zero-dimensional.
inline LieAlgebra strictly_upper_triangular(std::size_t m, Characteristic ch) {
    if (m < 2) throw DimensionMismatch("sut needs matrix size >= 2");
    std::vector<MatrixRep> basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) basis.push_back(MatrixRep::elementary(ch, m, i, j));
    return LieAlgebra::from_matrices("sut" + std::to_string(m), ch, std::move(basis));
}

inline LieAlgebra diagonal(std::size_t m, Characteristic ch) {
    if (m == 0) throw DimensionMismatch("diag needs matrix size >= 1");
    std::vector<MatrixRep> basis;
    for (std::size_t i = 0; i < m; ++i) basis.push_back(MatrixRep::elementary(ch, m, i, i));
    return LieAlgebra::from_matrices("diag" + std::to_string(m), ch, std::move(basis));
}

/// Algebra from a parsed definition document.
inline LieAlgebra load_custom(const nlohmann::json& doc, Characteristic ch) {
    if (!doc.is_object()) throw ParseError("algebra definition must be a JSON object");
    if (!doc.contains("matrix_size") || !doc["matrix_size"].is_number_integer())
        throw ParseError("algebra definition needs an integer \"matrix_size\"");
    if (!doc.contains("basis") || !doc["basis"].is_array())
        throw ParseError("algebra definition needs a \"basis\" array");
    const auto size = doc["matrix_size"].get<long long>();
    if (size < 1) throw ParseError("\"matrix_size\" must be positive");
    std::string name = "custom";
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }

    std::vector<MatrixRep> basis;
    std::size_t index = 0;
    for (const auto& jm : doc["basis"]) {
        ++index;
        const std::string where = "basis matrix " + std::to_string(index);
        if (!jm.is_array() || jm.size() != static_cast<std::size_t>(size))
            throw ParseError(where + " must have " + std::to_string(size) + " rows");
        std::vector<std::vector<long long>> rows;
        for (const auto& jr : jm) {
            if (!jr.is_array() || jr.size() != static_cast<std::size_t>(size))
                throw ParseError(where + " must have rows of length " + std::to_string(size));
            std::vector<long long> row;
            for (const auto& x : jr) {
                if (!x.is_number_integer()) throw ParseError(where + " has a non-integer entry");
                row.push_back(x.get<long long>());
            }
            rows.push_back(std::move(row));
        }
        basis.push_back(MatrixRep::from_integers(ch, rows));
    }
    if (basis.empty()) throw ParseError("\"basis\" is empty");
    if (doc.contains("dimension")) {
        if (!doc["dimension"].is_number_integer() ||
            doc["dimension"].get<long long>() != static_cast<long long>(basis.size()))
            throw ParseError("\"dimension\" does not match the number of basis matrices");
    }
    return LieAlgebra::from_matrices(std::move(name), ch, std::move(basis));
}

inline LieAlgebra load_custom_text(const std::string& text, Characteristic ch) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("algebra definition is not valid JSON: ") + e.what());
    }
    return load_custom(doc, ch);
}

inline LieAlgebra load_custom_file(const std::string& path, Characteristic ch) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_custom_text(buffer.str(), ch);
}

/// Serializes a matrix algebra's basis in the definition format. Entries must
/// be integers: residues in prime characteristic, integral rationals in 0.
inline nlohmann::json to_definition(const LieAlgebra& L) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& m : L.basis()) {
        nlohmann::json jm = nlohmann::json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            nlohmann::json jr = nlohmann::json::array();
            for (std::size_t j = 0; j < m.size(); ++j) {
                const Scalar& s = m.at(i, j);
                if (s.characteristic().is_zero()) {
                    if (boost::multiprecision::denominator(s.rational()) != 1)
                        throw Error("basis entry " + s.to_string() + " is not an integer");
                    jr.push_back(boost::multiprecision::numerator(s.rational()).convert_to<long long>());
                } else {
                    jr.push_back(s.residue());
                }
            }
            jm.push_back(std::move(jr));
        }
        basis.push_back(std::move(jm));
    }
    return {{"name", L.name()}, {"matrix_size", L.matrix_size()}, {"basis", std::move(basis)}};
}

/// Resolves a selector: "gl2", "sl3", "ut 3", "sut4", "diag2" (an optional
/// space or ':' may separate family and size), or "file:PATH".
inline LieAlgebra by_name(const std::string& selector, Characteristic ch) {
    if (selector.rfind("file:", 0) == 0) return load_custom_file(selector.substr(5), ch);

    std::size_t pos = 0;
    while (pos < selector.size() && std::isalpha(static_cast<unsigned char>(selector[pos]))) ++pos;
    std::string family = selector.substr(0, pos);
    std::string rest = selector.substr(pos);
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == ':')) rest.erase(0, 1);
    if (rest.empty() || rest.size() > 4 ||
        rest.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("unrecognized algebra \"" + selector + "\"");
    const std::size_t m = std::stoul(rest);

    if (family == "gl") return gl(m, ch);
    if (family == "sl") return sl(m, ch);
    if (family == "ut") return upper_triangular(m, ch);
    if (family == "sut") return strictly_upper_triangular(m, ch);
    if (family == "diag") return diagonal(m, ch);
    throw ParseError("unknown algebra family \"" + family + "\"");
}

}  // namespace lie_ideal::catalog

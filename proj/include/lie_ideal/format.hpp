#pragma once

// Text rendering of algebra elements and the generator expression grammar.
//
//   generators := expr (',' expr)*
//   expr       := ['+'|'-'] term (('+'|'-') term)*
//   term       := [integer ['*']] 'x' index | integer
//
// A bare integer term must be 0. Indices are 1-based.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lie_algebra.hpp"

namespace lie_ideal {

/// Linear combination of basis symbols: "x1 + 2 x4", "x4 - x1", "-x3", "0".
///
/// Prime characteristic prints canonical residues in index order. In
/// characteristic 0 positive terms come first (each group in index order),
/// so -x1 + x4 reads "x4 - x1".
inline std::string format_coords(const CoordVector& v) {
    struct Term {
        std::size_t index;
        Scalar coeff;
    };
    std::vector<Term> positive, negative;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        (v[i].is_negative() ? negative : positive).push_back({i, v[i]});
    }
    if (positive.empty() && negative.empty()) return "0";

    std::string out;
    auto emit = [&](const Term& t, bool first) {
        const bool neg = t.coeff.is_negative();
        const Scalar magnitude = neg ? -t.coeff : t.coeff;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (!magnitude.is_one()) out += magnitude.to_string() + " ";
        out += "x" + std::to_string(t.index + 1);
    };
    bool first = true;
    for (const auto& t : positive) emit(t, std::exchange(first, false));
    for (const auto& t : negative) emit(t, std::exchange(first, false));
    return out;
}

inline std::string format_element(const AlgebraElement& e) { return format_coords(e.coords()); }

/// "{a, b, c}"
inline std::string format_set(const std::vector<AlgebraElement>& elements) {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ", ";
        out += format_element(elements[i]);
    }
    return out + "}";
}

/// A parsed generator together with its source spelling.
struct ParsedGenerator {
    std::string text;
    AlgebraElement element;
};

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view src, const LieAlgebra& L) : src_(src), L_(L) {}

    std::vector<ParsedGenerator> parse_list() {
        std::vector<ParsedGenerator> out;
        skip_space();
        if (at_end()) throw ParseError("empty generator list");
        for (;;) {
            out.push_back(parse_expr());
            skip_space();
            if (at_end()) break;
            if (src_[pos_] != ',') fail("expected ',' or end of input");
            ++pos_;
        }
        return out;
    }

private:
    ParsedGenerator parse_expr() {
        const Characteristic ch = L_.characteristic();
        CoordVector coords(ch, L_.dimension());
        std::string display;
        bool first = true;
        for (;;) {
            skip_space();
            bool negative = false;
            bool have_sign = false;
            if (!at_end() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                negative = src_[pos_] == '-';
                have_sign = true;
                ++pos_;
                skip_space();
            }
            if (!first && !have_sign) fail("expected '+' or '-' between terms");

            std::string digits = read_digits();
            skip_space();
            if (!at_end() && src_[pos_] == '*') {
                if (digits.empty()) fail("'*' without a coefficient");
                ++pos_;
                skip_space();
                if (at_end() || src_[pos_] != 'x') fail("expected 'x' after '*'");
            }
            if (!at_end() && src_[pos_] == 'x') {
                ++pos_;
                std::string index = read_digits();
                if (index.empty()) fail("expected an index after 'x'");
                if (index.size() > 9) throw GeneratorError("basis index x" + index + " is out of range");
                const std::size_t i = std::stoul(index);
                if (i < 1 || i > L_.dimension())
                    throw GeneratorError("x" + index + " is not a basis element of " + L_.name() + " (dimension " +
                                         std::to_string(L_.dimension()) + ")");
                BigInt k = digits.empty() ? BigInt(1) : BigInt(digits);
                if (negative) k = -k;
                coords[i - 1] += Scalar(ch, k);

                if (first)
                    display += negative ? "-" : "";
                else
                    display += negative ? " - " : " + ";
                if (!digits.empty()) display += digits + " ";
                display += "x" + index;
            } else {
                if (digits.empty()) fail("expected a term");
                if (BigInt(digits) != 0) throw GeneratorError("constant " + digits + " is not an algebra element");
                if (!first) display += negative ? " - " : " + ";
                else if (negative) display += "-";
                display += digits;
            }
            first = false;

            skip_space();
            if (at_end() || src_[pos_] == ',') break;
        }
        return {display, AlgebraElement(std::move(coords))};
    }

    std::string read_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) d += src_[pos_++];
        return d;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= src_.size(); }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("generator expression, column " + std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view src_;
    const LieAlgebra& L_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "x3, x3 - x1" style input into elements of `L`.
inline std::vector<ParsedGenerator> parse_generators(std::string_view text, const LieAlgebra& L) {
    return detail::ExpressionParser(text, L).parse_list();
}

}  // namespace lie_ideal

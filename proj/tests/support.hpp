#pragma once

// Helpers shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "lie_ideal/lie_ideal.hpp"
#include "oracle.hpp"

namespace test_support {

using namespace lie_ideal;

inline AlgebraElement element(const LieAlgebra& L, std::initializer_list<long long> coords) {
    return L.element(CoordVector::from_integers(L.characteristic(), coords));
}

inline std::vector<AlgebraElement> elements(const LieAlgebra& L, const std::vector<std::vector<long long>>& rows) {
    std::vector<AlgebraElement> out;
    for (const auto& r : rows) out.push_back(L.element(CoordVector::from_integers(L.characteristic(), r)));
    return out;
}

inline oracle::Vec to_ints(const CoordVector& v) {
    oracle::Vec out;
    for (const auto& s : v) out.push_back(static_cast<int>(s.residue()));
    return out;
}

inline std::vector<oracle::Vec> to_ints(const std::vector<AlgebraElement>& es) {
    std::vector<oracle::Vec> out;
    for (const auto& e : es) out.push_back(to_ints(e.coords()));
    return out;
}

/// Random element with entries in [-bound, bound] (reduced mod p when p > 0).
inline AlgebraElement random_element(const LieAlgebra& L, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    CoordVector v(L.characteristic(), L.dimension());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Scalar(L.characteristic(), static_cast<long long>(dist(rng)));
    return AlgebraElement(std::move(v));
}

inline CoordMatrix random_matrix(Characteristic ch, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                 int bound = 3) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    CoordMatrix m(ch, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        CoordVector v(ch, cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = Scalar(ch, static_cast<long long>(dist(rng)));
        m.append(std::move(v));
    }
    return m;
}

/// Applies `count` random invertible row operations (swap, nonzero scale,
/// add multiple of another row).
inline CoordMatrix scramble_rows(CoordMatrix m, std::mt19937_64& rng, int count = 12) {
    const Characteristic ch = m.characteristic();
    if (m.row_count() == 0) return m;
    std::uniform_int_distribution<std::size_t> row(0, m.row_count() - 1);
    std::uniform_int_distribution<int> kind(0, 2), coeff(1, 6);
    for (int step = 0; step < count; ++step) {
        std::size_t a = row(rng), b = row(rng);
        Scalar c(ch, static_cast<long long>(coeff(rng)));
        switch (kind(rng)) {
            case 0: std::swap(m[a], m[b]); break;
            case 1:
                if (!c.is_zero()) m[a] *= c;
                break;
            default:
                if (a != b) m[a].add_scaled(c, m[b]);
        }
    }
    return m;
}

/// Every bracket of an ideal basis vector with every algebra basis vector lies
/// in the ideal.
inline bool is_closed_ideal(const LieAlgebra& L, const IdealResult& r) {
    const CoordMatrix basis = r.basis_matrix(L);
    if (!is_rref(basis) && basis.row_count() != 0) return false;
    for (const auto& b : r.basis)
        for (std::size_t i = 0; i < L.dimension(); ++i)
            if (!in_span(L.bracket_with_basis(b, i).coords(), basis)) return false;
    return true;
}

inline std::vector<std::vector<long long>> rows_of(const std::vector<AlgebraElement>& es) {
    std::vector<std::vector<long long>> out;
    for (const auto& e : es) {
        std::vector<long long> r;
        for (const auto& s : e.coords()) {
            if (s.characteristic().is_zero())
                r.push_back(boost::multiprecision::numerator(s.rational()).convert_to<long long>());
            else
                r.push_back(static_cast<long long>(s.residue()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace test_support

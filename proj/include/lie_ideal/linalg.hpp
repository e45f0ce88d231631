#pragma once

// Dense exact linear algebra over a Scalar field. Subspaces are represented
// canonically by the reduced row echelon form of a spanning matrix, so two
// subspaces are equal exactly when their rref() outputs compare equal.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace lie_ideal {

/// Coordinates of a vector relative to a fixed basis.
class CoordVector {
public:
    CoordVector() = default;

    /// Zero vector of length `n`.
    CoordVector(Characteristic ch, std::size_t n) : ch_(ch), entries_(n, Scalar::zero(ch)) {}

    CoordVector(Characteristic ch, std::vector<Scalar> entries) : ch_(ch), entries_(std::move(entries)) {
        for (const auto& e : entries_)
            if (e.characteristic() != ch_)
                throw CharacteristicMismatch("coordinate entry of characteristic " +
                                             std::to_string(e.characteristic().value()) +
                                             " in a vector of characteristic " + std::to_string(ch_.value()));
    }

    static CoordVector from_integers(Characteristic ch, std::span<const long long> values) {
        std::vector<Scalar> entries;
        entries.reserve(values.size());
        for (long long v : values) entries.emplace_back(ch, v);
        return CoordVector(ch, std::move(entries));
    }

    static CoordVector from_integers(Characteristic ch, std::initializer_list<long long> values) {
        return from_integers(ch, std::span<const long long>(values.begin(), values.size()));
    }

    static CoordVector unit(Characteristic ch, std::size_t n, std::size_t i) {
        CoordVector v(ch, n);
        v.entries_.at(i) = Scalar::one(ch);
        return v;
    }

    Characteristic characteristic() const noexcept { return ch_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Scalar> entries() const noexcept { return entries_; }

    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    /// Index of the first nonzero entry, or size() for the zero vector.
    std::size_t leading_index() const {
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!entries_[i].is_zero()) return i;
        return entries_.size();
    }

    /// this += factor * other
    void add_scaled(const Scalar& factor, const CoordVector& other) {
        check_compatible(other);
        if (factor.is_zero()) return;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!other.entries_[i].is_zero()) entries_[i] += factor * other.entries_[i];
    }

    CoordVector& operator*=(const Scalar& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend CoordVector operator+(CoordVector a, const CoordVector& b) {
        a.add_scaled(Scalar::one(a.ch_), b);
        return a;
    }

    friend CoordVector operator-(CoordVector a, const CoordVector& b) {
        a.add_scaled(-Scalar::one(a.ch_), b);
        return a;
    }

    friend CoordVector operator-(CoordVector a) {
        a *= -Scalar::one(a.ch_);
        return a;
    }

    friend CoordVector operator*(const Scalar& s, CoordVector v) {
        v *= s;
        return v;
    }

    friend bool operator==(const CoordVector&, const CoordVector&) = default;

    void check_compatible(const CoordVector& other) const {
        if (ch_ != other.ch_) throw CharacteristicMismatch("vectors over different fields");
        if (size() != other.size())
            throw DimensionMismatch("vector lengths " + std::to_string(size()) + " and " +
                                    std::to_string(other.size()) + " differ");
    }

private:
    Characteristic ch_{};
    std::vector<Scalar> entries_;
};

/// A rectangular stack of coordinate vectors of common length and field.
class CoordMatrix {
public:
    CoordMatrix() = default;

    /// Empty matrix with `cols` columns.
    CoordMatrix(Characteristic ch, std::size_t cols) : ch_(ch), cols_(cols) {}

    CoordMatrix(Characteristic ch, std::size_t cols, std::vector<CoordVector> rows)
        : ch_(ch), cols_(cols), rows_(std::move(rows)) {
        for (const auto& r : rows_) check_row(r);
    }

    /// Column count is taken from the first row; ragged input throws.
    static CoordMatrix from_integers(Characteristic ch, const std::vector<std::vector<long long>>& rows,
                                     std::size_t cols_if_empty = 0) {
        CoordMatrix m(ch, rows.empty() ? cols_if_empty : rows.front().size());
        for (const auto& r : rows) m.append(CoordVector::from_integers(ch, r));
        return m;
    }

    static CoordMatrix identity(Characteristic ch, std::size_t k) {
        CoordMatrix m(ch, k);
        for (std::size_t i = 0; i < k; ++i) m.append(CoordVector::unit(ch, k, i));
        return m;
    }

    void append(CoordVector row) {
        check_row(row);
        rows_.push_back(std::move(row));
    }

    Characteristic characteristic() const noexcept { return ch_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_.empty(); }

    const std::vector<CoordVector>& rows() const noexcept { return rows_; }
    const CoordVector& operator[](std::size_t i) const { return rows_[i]; }
    CoordVector& operator[](std::size_t i) { return rows_[i]; }

    auto begin() const noexcept { return rows_.begin(); }
    auto end() const noexcept { return rows_.end(); }

    friend bool operator==(const CoordMatrix&, const CoordMatrix&) = default;

private:
    void check_row(const CoordVector& r) const {
        if (r.characteristic() != ch_) throw CharacteristicMismatch("row over a different field");
        if (r.size() != cols_)
            throw DimensionMismatch("ragged matrix: row of length " + std::to_string(r.size()) +
                                    " in a matrix with " + std::to_string(cols_) + " columns");
    }

    Characteristic ch_{};
    std::size_t cols_ = 0;
    std::vector<CoordVector> rows_;
};

/// Rows that are not identically zero, in their original order.
inline CoordMatrix drop_zero_rows(const CoordMatrix& m) {
    CoordMatrix out(m.characteristic(), m.col_count());
    for (const auto& r : m)
        if (!r.is_zero()) out.append(r);
    return out;
}

/// Reduced row echelon form with zero rows removed. Pivots are taken as the
/// first row (from the current position down) with a nonzero entry in the
/// column; exact arithmetic needs no other pivoting strategy.
inline CoordMatrix rref(const CoordMatrix& m) {
    std::vector<CoordVector> rows = m.rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.col_count() && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        rows[rank] *= rows[rank][col].inverse();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            rows[i].add_scaled(-rows[i][col], rows[rank]);
        }
        ++rank;
    }
    rows.resize(rank);
    return CoordMatrix(m.characteristic(), m.col_count(), std::move(rows));
}

inline std::size_t rank(const CoordMatrix& m) { return rref(m).row_count(); }

/// True when `m` is in reduced row echelon form with no zero rows.
inline bool is_rref(const CoordMatrix& m) {
    std::size_t previous = 0;
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        std::size_t lead = m[i].leading_index();
        if (lead == m.col_count()) return false;
        if (i > 0 && lead <= previous) return false;
        if (!m[i][lead].is_one()) return false;
        for (std::size_t j = 0; j < m.row_count(); ++j)
            if (j != i && !m[j][lead].is_zero()) return false;
        previous = lead;
    }
    return true;
}

/// Residual of `v` after eliminating against the pivots of an RREF basis.
/// Zero exactly when `v` lies in the row space.
inline CoordVector reduce(CoordVector v, const CoordMatrix& basis) {
    if (v.characteristic() != basis.characteristic())
        throw CharacteristicMismatch("vector and basis over different fields");
    if (v.size() != basis.col_count())
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " against a basis with " +
                                std::to_string(basis.col_count()) + " columns");
    for (const auto& row : basis) {
        std::size_t lead = row.leading_index();
        if (lead < v.size() && !v[lead].is_zero()) v.add_scaled(-v[lead], row);
    }
    return v;
}

/// Span membership against a basis in RREF.
inline bool in_span(const CoordVector& v, const CoordMatrix& basis) {
    if (!is_rref(basis)) throw Error("in_span requires a basis in reduced row echelon form");
    return reduce(v, basis).is_zero();
}

/// Canonical (RREF) basis of { x : m x = 0 }.
inline CoordMatrix null_space(const CoordMatrix& m) {
    const Characteristic ch = m.characteristic();
    const std::size_t n = m.col_count();
    CoordMatrix reduced = rref(m);
    std::vector<std::size_t> pivot_of_col(n, n);
    for (std::size_t i = 0; i < reduced.row_count(); ++i) pivot_of_col[reduced[i].leading_index()] = i;

    CoordMatrix kernel(ch, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] != n) continue;
        CoordVector x(ch, n);
        x[free] = Scalar::one(ch);
        for (std::size_t col = 0; col < n; ++col)
            if (pivot_of_col[col] != n) x[col] = -reduced[pivot_of_col[col]][free];
        kernel.append(std::move(x));
    }
    return rref(kernel);
}

}  // namespace lie_ideal

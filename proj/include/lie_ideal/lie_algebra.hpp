#pragma once

// Finite-dimensional Lie algebras given by an ordered basis of square
// matrices under the commutator bracket. Structure constants are computed once
// at construction; every later bracket works on coordinates only.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace lie_ideal {

/// Square matrix of scalars, stored row-major.
class MatrixRep {
public:
    MatrixRep() = default;

    /// Zero matrix of size m x m.
    MatrixRep(Characteristic ch, std::size_t m) : ch_(ch), size_(m), entries_(m * m, Scalar::zero(ch)) {}

    /// Integer entries reduced into characteristic `ch`.
    static MatrixRep from_integers(Characteristic ch, const std::vector<std::vector<long long>>& rows) {
        MatrixRep out(ch, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw DimensionMismatch("matrix is not square: row " + std::to_string(i + 1) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(rows.size()));
            for (std::size_t j = 0; j < rows.size(); ++j) out.at(i, j) = Scalar(ch, rows[i][j]);
        }
        return out;
    }

    /// E_ij: one in position (i, j), zero elsewhere (0-based).
    static MatrixRep elementary(Characteristic ch, std::size_t m, std::size_t i, std::size_t j) {
        MatrixRep out(ch, m);
        out.at(i, j) = Scalar::one(ch);
        return out;
    }

    Characteristic characteristic() const noexcept { return ch_; }
    std::size_t size() const noexcept { return size_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }

    /// Entries as one vector of length m^2, row-major.
    CoordVector flatten() const { return CoordVector(ch_, entries_); }

    static MatrixRep unflatten(const CoordVector& v, std::size_t m) {
        if (v.size() != m * m) throw DimensionMismatch("flattened length does not match matrix size");
        MatrixRep out(v.characteristic(), m);
        for (std::size_t k = 0; k < v.size(); ++k) out.entries_[k] = v[k];
        return out;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend MatrixRep operator*(const MatrixRep& a, const MatrixRep& b) {
        check_compatible(a, b);
        const std::size_t m = a.size_;
        MatrixRep out(a.ch_, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& lhs = a.at(i, k);
                if (lhs.is_zero()) continue;
                for (std::size_t j = 0; j < m; ++j)
                    if (!b.at(k, j).is_zero()) out.at(i, j) += lhs * b.at(k, j);
            }
        return out;
    }

    friend MatrixRep operator+(MatrixRep a, const MatrixRep& b) {
        check_compatible(a, b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
        return a;
    }

    friend MatrixRep operator-(MatrixRep a, const MatrixRep& b) {
        check_compatible(a, b);
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
        return a;
    }

    friend MatrixRep operator*(const Scalar& s, MatrixRep a) {
        for (auto& e : a.entries_) e *= s;
        return a;
    }

    friend bool operator==(const MatrixRep&, const MatrixRep&) = default;

private:
    static void check_compatible(const MatrixRep& a, const MatrixRep& b) {
        if (a.ch_ != b.ch_) throw CharacteristicMismatch("matrices over different fields");
        if (a.size_ != b.size_)
            throw DimensionMismatch("matrix sizes " + std::to_string(a.size_) + " and " +
                                    std::to_string(b.size_) + " differ");
    }

    Characteristic ch_{};
    std::size_t size_ = 0;
    std::vector<Scalar> entries_;
};

/// Commutator xy - yx.
inline MatrixRep bracket(const MatrixRep& x, const MatrixRep& y) { return x * y - y * x; }

/// An element of a LieAlgebra, held as coordinates in the algebra's basis.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(CoordVector coords) : coords_(std::move(coords)) {}

    const CoordVector& coords() const noexcept { return coords_; }
    std::size_t dimension() const noexcept { return coords_.size(); }
    Characteristic characteristic() const noexcept { return coords_.characteristic(); }
    bool is_zero() const { return coords_.is_zero(); }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        return AlgebraElement(a.coords_ + b.coords_);
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        return AlgebraElement(a.coords_ - b.coords_);
    }
    friend AlgebraElement operator-(const AlgebraElement& a) { return AlgebraElement(-a.coords_); }
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
        return AlgebraElement(s * a.coords_);
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    CoordVector coords_;
};

/// A Lie algebra with a fixed ordered basis x_1..x_n. Immutable after
/// construction.
class LieAlgebra {
public:
    /// Builds the algebra spanned by `basis` under the commutator. Throws
    /// IndependenceError for dependent matrices and ClosureError when some
    /// [x_i, x_j] leaves the span.
    static LieAlgebra from_matrices(std::string name, Characteristic ch, std::vector<MatrixRep> basis) {
        if (basis.empty()) throw DimensionMismatch("a Lie algebra basis needs at least one matrix");
        const std::size_t m = basis.front().size();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].characteristic() != ch)
                throw CharacteristicMismatch("basis matrix " + std::to_string(i + 1) + " has the wrong characteristic");
            if (basis[i].size() != m)
                throw DimensionMismatch("basis matrix " + std::to_string(i + 1) + " has size " +
                                        std::to_string(basis[i].size()) + ", expected " + std::to_string(m));
        }

        LieAlgebra L;
        L.name_ = std::move(name);
        L.ch_ = ch;
        L.n_ = basis.size();
        L.matrix_size_ = m;
        L.basis_ = std::move(basis);
        L.build_recognizer();
        L.constants_.assign(L.n_ * L.n_ * L.n_, Scalar::zero(ch));

        for (std::size_t i = 0; i < L.n_; ++i)
            for (std::size_t j = i + 1; j < L.n_; ++j) {
                auto coords = L.try_recognize(lie_ideal::bracket(L.basis_[i], L.basis_[j]));
                if (!coords)
                    throw ClosureError(i + 1, j + 1,
                                       "basis is not closed under the bracket: [x" + std::to_string(i + 1) +
                                           ", x" + std::to_string(j + 1) + "] is outside the span");
                for (std::size_t k = 0; k < L.n_; ++k) {
                    L.constant_ref(i, j, k) = (*coords)[k];
                    L.constant_ref(j, i, k) = -(*coords)[k];
                }
            }
        return L;
    }

    /// Abstract algebra from dense constants, indexed [(i * n + j) * n + k] for
    /// c_ij^k. Validated for antisymmetry and the Jacobi identity. Such an
    /// algebra has no matrix basis, so recognize/realize are unavailable.
    static LieAlgebra from_structure_constants(std::string name, Characteristic ch, std::size_t n,
                                               std::vector<Scalar> constants) {
        if (n == 0) throw DimensionMismatch("dimension must be positive");
        if (constants.size() != n * n * n)
            throw DimensionMismatch("expected " + std::to_string(n * n * n) + " structure constants, got " +
                                    std::to_string(constants.size()));
        for (const auto& c : constants)
            if (c.characteristic() != ch) throw CharacteristicMismatch("structure constant of the wrong characteristic");
        LieAlgebra L;
        L.name_ = std::move(name);
        L.ch_ = ch;
        L.n_ = n;
        L.constants_ = std::move(constants);
        if (auto problem = L.find_structure_violation()) throw StructureError(*problem);
        return L;
    }

    const std::string& name() const noexcept { return name_; }
    Characteristic characteristic() const noexcept { return ch_; }
    std::size_t dimension() const noexcept { return n_; }

    bool has_matrix_basis() const noexcept { return !basis_.empty(); }
    std::size_t matrix_size() const noexcept { return matrix_size_; }
    std::span<const MatrixRep> basis() const noexcept { return basis_; }

    /// c_ij^k with [x_i, x_j] = sum_k c_ij^k x_k (0-based indices).
    const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * n_ + j) * n_ + k];
    }

    /// Diagnostic for antisymmetry or Jacobi failure; nullopt when both hold.
    std::optional<std::string> find_structure_violation() const {
        const std::size_t n = n_;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!structure_constant(i, i, k).is_zero())
                    return "[x" + std::to_string(i + 1) + ", x" + std::to_string(i + 1) + "] is nonzero";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (structure_constant(i, j, k) != -structure_constant(j, i, k))
                        return "antisymmetry fails at c_" + std::to_string(i + 1) + std::to_string(j + 1) + "^" +
                               std::to_string(k + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    for (std::size_t m = 0; m < n; ++m) {
                        Scalar sum = Scalar::zero(ch_);
                        for (std::size_t l = 0; l < n; ++l) {
                            sum += structure_constant(i, j, l) * structure_constant(l, k, m);
                            sum += structure_constant(j, k, l) * structure_constant(l, i, m);
                            sum += structure_constant(k, i, l) * structure_constant(l, j, m);
                        }
                        if (!sum.is_zero())
                            return "Jacobi identity fails for (x" + std::to_string(i + 1) + ", x" +
                                   std::to_string(j + 1) + ", x" + std::to_string(k + 1) + ")";
                    }
        return std::nullopt;
    }

    AlgebraElement zero() const { return AlgebraElement(CoordVector(ch_, n_)); }

    /// x_{i+1}
    AlgebraElement basis_element(std::size_t i) const { return AlgebraElement(CoordVector::unit(ch_, n_, i)); }

    /// Wraps coordinates after checking length and field.
    AlgebraElement element(CoordVector coords) const {
        if (coords.characteristic() != ch_)
            throw CharacteristicMismatch("element of characteristic " + std::to_string(coords.characteristic().value()) +
                                         " in an algebra of characteristic " + std::to_string(ch_.value()));
        if (coords.size() != n_)
            throw DimensionMismatch("element has " + std::to_string(coords.size()) +
                                    " coordinates, algebra dimension is " + std::to_string(n_));
        return AlgebraElement(std::move(coords));
    }

    void check_member(const AlgebraElement& a) const {
        if (a.characteristic() != ch_) throw CharacteristicMismatch("element from a field of another characteristic");
        if (a.dimension() != n_)
            throw DimensionMismatch("element of dimension " + std::to_string(a.dimension()) +
                                    " does not belong to an algebra of dimension " + std::to_string(n_));
    }

    /// Coordinates of matrix `m` in the basis; NotInSpan if it is not a combination.
    AlgebraElement recognize(const MatrixRep& m) const {
        require_matrices();
        if (m.characteristic() != ch_) throw CharacteristicMismatch("matrix of the wrong characteristic");
        if (m.size() != matrix_size_)
            throw DimensionMismatch("matrix of size " + std::to_string(m.size()) + ", algebra matrices have size " +
                                    std::to_string(matrix_size_));
        auto coords = try_recognize(m);
        if (!coords) throw NotInSpan("matrix is not a linear combination of the basis of " + name_);
        return AlgebraElement(std::move(*coords));
    }

    /// sum_i coords_i x_i as a matrix.
    MatrixRep realize(const AlgebraElement& e) const {
        require_matrices();
        check_member(e);
        MatrixRep out(ch_, matrix_size_);
        for (std::size_t i = 0; i < n_; ++i)
            if (!e.coords()[i].is_zero()) out = out + e.coords()[i] * basis_[i];
        return out;
    }

    /// [a, b] through the structure constants.
    AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) const {
        check_member(a);
        check_member(b);
        CoordVector out(ch_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a.coords()[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (b.coords()[j].is_zero()) continue;
                Scalar ab = a.coords()[i] * b.coords()[j];
                for (std::size_t k = 0; k < n_; ++k) {
                    const Scalar& c = structure_constant(i, j, k);
                    if (!c.is_zero()) out[k] += ab * c;
                }
            }
        }
        return AlgebraElement(std::move(out));
    }

    /// [a, x_{j+1}]
    AlgebraElement bracket_with_basis(const AlgebraElement& a, std::size_t j) const {
        check_member(a);
        CoordVector out(ch_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (a.coords()[i].is_zero()) continue;
            for (std::size_t k = 0; k < n_; ++k) {
                const Scalar& c = structure_constant(i, j, k);
                if (!c.is_zero()) out[k] += a.coords()[i] * c;
            }
        }
        return AlgebraElement(std::move(out));
    }

    /// Entry (i, j) is [x_{i+1}, x_{j+1}].
    std::vector<std::vector<AlgebraElement>> multiplication_table() const {
        std::vector<std::vector<AlgebraElement>> table(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            table[i].reserve(n_);
            for (std::size_t j = 0; j < n_; ++j) {
                CoordVector row(ch_, n_);
                for (std::size_t k = 0; k < n_; ++k) row[k] = structure_constant(i, j, k);
                table[i].emplace_back(std::move(row));
            }
        }
        return table;
    }

private:
    LieAlgebra() = default;

    Scalar& constant_ref(std::size_t i, std::size_t j, std::size_t k) { return constants_[(i * n_ + j) * n_ + k]; }

    void require_matrices() const {
        if (!has_matrix_basis()) throw Error("algebra " + name_ + " has no matrix basis");
    }

    // Row-reduces [flatten(x_i) | e_i]. After reduction each row r reads
    // flat_r = sum_i T_ri x_i, so a matrix with flat part v equals
    // sum_r v[pivot_r] * flat_r, whose coordinates are sum_r v[pivot_r] T_r.
    void build_recognizer() {
        const std::size_t flat = matrix_size_ * matrix_size_;
        CoordMatrix running(ch_, flat);
        CoordMatrix augmented(ch_, flat + n_);
        for (std::size_t i = 0; i < n_; ++i) {
            CoordVector v = basis_[i].flatten();
            if (reduce(v, running).is_zero())
                throw IndependenceError(i + 1, "basis matrix " + std::to_string(i + 1) +
                                                   " is a linear combination of the preceding ones");
            running.append(std::move(v));
            running = rref(running);

            const CoordVector flat_i = basis_[i].flatten();
            std::vector<Scalar> row(flat_i.begin(), flat_i.end());
            for (std::size_t k = 0; k < n_; ++k) row.push_back(k == i ? Scalar::one(ch_) : Scalar::zero(ch_));
            augmented.append(CoordVector(ch_, std::move(row)));
        }
        recognizer_ = rref(augmented);
    }

    std::optional<CoordVector> try_recognize(const MatrixRep& m) const {
        const std::size_t flat = matrix_size_ * matrix_size_;
        CoordVector v = m.flatten();
        CoordVector coords(ch_, n_);
        for (const auto& row : recognizer_) {
            std::size_t lead = row.leading_index();
            if (lead >= flat) break;
            Scalar factor = v[lead];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k < flat; ++k)
                if (!row[k].is_zero()) v[k] -= factor * row[k];
            for (std::size_t k = 0; k < n_; ++k)
                if (!row[flat + k].is_zero()) coords[k] += factor * row[flat + k];
        }
        if (!v.is_zero()) return std::nullopt;
        return coords;
    }

    std::string name_;
    Characteristic ch_{};
    std::size_t n_ = 0;
    std::size_t matrix_size_ = 0;
    std::vector<MatrixRep> basis_;
    std::vector<Scalar> constants_;
    CoordMatrix recognizer_;
};

}  // namespace lie_ideal

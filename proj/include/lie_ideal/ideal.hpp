#pragma once

// Ideal closure and the structural queries built on it.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"

namespace lie_ideal {

/// Spanning set after `depth` rounds of bracketing with the algebra basis.
struct TraceEntry {
    std::size_t depth = 0;
    std::vector<AlgebraElement> spanning_set;
    std::size_t dimension = 0;
};

struct IdealResult {
    std::vector<AlgebraElement> generators;
    /// Rows of the RREF coordinate matrix, no zero rows.
    std::vector<AlgebraElement> basis;
    std::size_t dimension = 0;
    std::vector<TraceEntry> trace;

    CoordMatrix basis_matrix(const LieAlgebra& L) const {
        CoordMatrix m(L.characteristic(), L.dimension());
        for (const auto& b : basis) m.append(b.coords());
        return m;
    }

    bool contains(const LieAlgebra& L, const AlgebraElement& e) const {
        return reduce(e.coords(), basis_matrix(L)).is_zero();
    }
};

namespace detail {

inline std::vector<AlgebraElement> rows_as_elements(const CoordMatrix& m) {
    std::vector<AlgebraElement> out;
    out.reserve(m.row_count());
    for (const auto& r : m) out.emplace_back(r);
    return out;
}

}  // namespace detail

/// Smallest ideal of L containing `gens`.
///
/// Depth 0 is the RREF of the generators. Each further round brackets every
/// current spanning vector with every basis vector x_i, appends the results
/// and row-reduces again. The loop stops once the dimension reaches n or
/// fails to grow; the final, repeated spanning set is kept in the trace.
inline IdealResult ideal_generated(const LieAlgebra& L, std::span<const AlgebraElement> gens) {
    const std::size_t n = L.dimension();
    IdealResult result;
    CoordMatrix current(L.characteristic(), n);
    for (const auto& g : gens) {
        try {
            L.check_member(g);
        } catch (const Error& e) {
            throw GeneratorError(std::string("generator does not belong to ") + L.name() + ": " + e.what());
        }
        result.generators.push_back(g);
        current.append(g.coords());
    }
    current = rref(current);
    result.trace.push_back({0, detail::rows_as_elements(current), current.row_count()});

    std::size_t depth = 0;
    if (current.row_count() != 0) {
        while (current.row_count() < n) {
            const std::size_t previous = current.row_count();
            CoordMatrix next = current;
            for (std::size_t i = 0; i < n; ++i)
                for (const auto& row : current) {
                    auto b = L.bracket_with_basis(AlgebraElement(row), i);
                    if (!b.is_zero()) next.append(b.coords());
                }
            current = rref(next);
            ++depth;
            result.trace.push_back({depth, detail::rows_as_elements(current), current.row_count()});
            if (current.row_count() == previous) break;
        }
    }

    result.basis = detail::rows_as_elements(current);
    result.dimension = current.row_count();
    return result;
}

inline IdealResult ideal_generated(const LieAlgebra& L, std::initializer_list<AlgebraElement> gens) {
    return ideal_generated(L, std::span<const AlgebraElement>(gens.begin(), gens.size()));
}

/// [L, L], as the ideal generated by all [x_i, x_j] with i < j.
inline IdealResult derived_subalgebra(const LieAlgebra& L) {
    std::vector<AlgebraElement> brackets;
    for (std::size_t i = 0; i < L.dimension(); ++i)
        for (std::size_t j = i + 1; j < L.dimension(); ++j) brackets.push_back(L.bracket(L.basis_element(i), L.basis_element(j)));
    return ideal_generated(L, brackets);
}

/// RREF basis of { z : [z, x_i] = 0 for all i }: the null space of the
/// stacked adjoint system sum_i z_i c_ij^k = 0 over all (j, k).
inline std::vector<AlgebraElement> center(const LieAlgebra& L) {
    const std::size_t n = L.dimension();
    CoordMatrix system(L.characteristic(), n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            CoordVector row(L.characteristic(), n);
            for (std::size_t i = 0; i < n; ++i) row[i] = L.structure_constant(i, j, k);
            if (!row.is_zero()) system.append(std::move(row));
        }
    return detail::rows_as_elements(null_space(system));
}

enum class Simplicity { simple, not_simple, inconclusive };

inline const char* to_string(Simplicity s) {
    switch (s) {
        case Simplicity::simple: return "simple";
        case Simplicity::not_simple: return "not simple";
        case Simplicity::inconclusive: return "inconclusive";
    }
    return "?";
}

struct SimplicityOptions {
    /// Largest number of projective points enumerated exhaustively.
    std::uint64_t cap = 1'000'000;
    unsigned threads = 1;
};

struct SimplicityReport {
    Simplicity verdict = Simplicity::inconclusive;
    std::string reason;
    /// Element whose generated ideal is proper, when one was found by enumeration.
    std::optional<AlgebraElement> witness_generator;
    /// Proper nonzero ideal exhibiting non-simplicity.
    std::optional<IdealResult> witness;
    /// Candidates examined, counted in lexicographic order up to and including
    /// the witness; independent of thread count.
    std::uint64_t candidates_tested = 0;
    /// (p^n - 1)/(p - 1), saturating; 0 in characteristic 0.
    std::uint64_t projective_points = 0;
    IdealResult derived;
    std::vector<AlgebraElement> center;
};

/// (p^n - 1)/(p - 1), saturating at the maximum uint64.
inline std::uint64_t projective_point_count(std::uint64_t p, std::size_t n) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0, power = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > max - power) return max;
        total += power;
        if (i + 1 < n) {
            if (power > max / p) return max;
            power *= p;
        }
    }
    return total;
}

/// The `index`-th projective representative in lexicographic coordinate
/// order; the first nonzero coordinate is 1.
inline CoordVector projective_point(Characteristic ch, std::size_t n, std::uint64_t index) {
    const std::uint64_t p = ch.value();
    CoordVector v(ch, n);
    std::uint64_t block = 1;
    for (std::size_t lead = n; lead-- > 0;) {
        if (index < block) {
            v[lead] = Scalar::one(ch);
            for (std::size_t pos = n; pos-- > lead + 1;) {
                v[pos] = Scalar(ch, static_cast<long long>(index % p));
                index /= p;
            }
            return v;
        }
        index -= block;
        block *= p;
    }
    throw DimensionMismatch("projective point index out of range");
}

/// Simplicity test. Quick rejections (abelian, proper derived subalgebra,
/// nonzero center) come first; in prime characteristic every projective
/// point is then tried as a generator, up to `options.cap` points.
inline SimplicityReport is_simple(const LieAlgebra& L, SimplicityOptions options = {}) {
    const std::size_t n = L.dimension();
    const Characteristic ch = L.characteristic();
    SimplicityReport report;
    report.derived = derived_subalgebra(L);
    report.center = center(L);

    if (report.derived.dimension == 0) {
        report.verdict = Simplicity::not_simple;
        report.reason = "abelian";
        return report;
    }
    if (report.derived.dimension < n) {
        report.verdict = Simplicity::not_simple;
        report.reason = "derived subalgebra is a proper ideal";
        report.witness = report.derived;
        return report;
    }
    if (!report.center.empty()) {
        report.verdict = Simplicity::not_simple;
        report.reason = "nonzero center";
        report.witness = ideal_generated(L, report.center);
        return report;
    }
    if (ch.is_zero()) {
        report.verdict = Simplicity::inconclusive;
        report.reason = "characteristic 0: exhaustive enumeration impossible; quick rejections passed";
        return report;
    }

    report.projective_points = projective_point_count(ch.value(), n);
    auto generates_proper = [&](const CoordVector& v) {
        AlgebraElement g(v);
        return ideal_generated(L, {g}).dimension < n;
    };

    if (report.projective_points > options.cap) {
        for (std::size_t i = 0; i < n; ++i) {
            ++report.candidates_tested;
            auto e = L.basis_element(i);
            auto ideal = ideal_generated(L, {e});
            if (ideal.dimension < n) {
                report.verdict = Simplicity::not_simple;
                report.reason = "basis element generates a proper ideal";
                report.witness_generator = e;
                report.witness = std::move(ideal);
                return report;
            }
        }
        report.verdict = Simplicity::inconclusive;
        report.reason = "projective point count exceeds the cap; only basis directions tested";
        return report;
    }

    const std::uint64_t total = report.projective_points;
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> first_failure{none};
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 1024))));

    if (workers == 1) {
        for (std::uint64_t idx = 0; idx < total; ++idx)
            if (generates_proper(projective_point(ch, n, idx))) {
                first_failure = idx;
                break;
            }
    } else {
        // Workers claim fixed-size blocks in increasing order and stop once a
        // failure below their next block is known; the minimum failing index
        // is the same as in a sequential scan.
        constexpr std::uint64_t block = 64;
        std::atomic<std::uint64_t> next_block{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t start = next_block.fetch_add(block);
                    if (start >= total || start > first_failure.load()) return;
                    const std::uint64_t stop = std::min(total, start + block);
                    for (std::uint64_t idx = start; idx < stop; ++idx) {
                        if (idx > first_failure.load()) return;
                        if (generates_proper(projective_point(ch, n, idx))) {
                            std::uint64_t seen = first_failure.load();
                            while (idx < seen && !first_failure.compare_exchange_weak(seen, idx)) {}
                            return;
                        }
                    }
                }
            });
    }

    if (first_failure.load() == none) {
        report.verdict = Simplicity::simple;
        report.reason = "every nonzero element generates the whole algebra";
        report.candidates_tested = total;
        return report;
    }
    const std::uint64_t idx = first_failure.load();
    AlgebraElement g(projective_point(ch, n, idx));
    report.verdict = Simplicity::not_simple;
    report.reason = "element generates a proper ideal";
    report.candidates_tested = idx + 1;
    report.witness = ideal_generated(L, {g});
    report.witness_generator = std::move(g);
    return report;
}

}  // namespace lie_ideal

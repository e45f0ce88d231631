#include <gtest/gtest.h>

#include <random>

#include "lie_ideal/catalog.hpp"
#include "lie_ideal/lie_algebra.hpp"
#include "support.hpp"

using namespace lie_ideal;
using test_support::element;
using test_support::random_element;

namespace {

const Characteristic Q{0};
const Characteristic F2{2};
const Characteristic F3{3};

MatrixRep mat(Characteristic ch, std::vector<std::vector<long long>> rows) { return MatrixRep::from_integers(ch, rows); }

// gl2 table, rows/cols x1..x4, entries as coordinates.
const std::vector<std::vector<std::vector<long long>>> kGl2Table = {
    {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}},
    {{0, -1, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, -1}, {0, 1, 0, 0}},
    {{0, 0, 1, 0}, {-1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, -1, 0}},
    {{0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}},
};

}  // namespace

TEST(BracketMatrices, Examples) {
    auto gl2 = catalog::gl(2, Q);
    auto x = gl2.basis();
    EXPECT_EQ(bracket(x[1], x[2]), mat(Q, {{1, 0}, {0, -1}}));
    EXPECT_EQ(bracket(x[0], x[1]), x[1]);
    auto a = mat(Q, {{3, -1}, {7, 2}});
    EXPECT_TRUE(bracket(a, a).is_zero());
}

TEST(BracketMatrices, Mismatch) {
    EXPECT_THROW(bracket(MatrixRep(Q, 2), MatrixRep(Q, 3)), DimensionMismatch);
    EXPECT_THROW(bracket(MatrixRep(Q, 2), MatrixRep(F3, 2)), CharacteristicMismatch);
}

TEST(Recognize, Gl2ReadsEntries) {
    auto gl2 = catalog::gl(2, Q);
    EXPECT_EQ(gl2.recognize(mat(Q, {{1, 2}, {0, 1}})), element(gl2, {1, 2, 0, 1}));
    EXPECT_EQ(gl2.recognize(MatrixRep(Q, 2)), gl2.zero());
}

TEST(Recognize, SubalgebraSolvesLinearSystem) {
    auto sl2 = catalog::sl(2, Q);
    EXPECT_EQ(sl2.recognize(mat(Q, {{2, 5}, {-1, -2}})), element(sl2, {5, -1, 2}));

    // Oracle: identity has trace 2 != 0, so appending it raises the rank of
    // the flattened sl2 basis from 3 to 4.
    CoordMatrix flat(Q, 4);
    for (const auto& b : sl2.basis()) flat.append(b.flatten());
    ASSERT_EQ(rank(flat), 3u);
    flat.append(mat(Q, {{1, 0}, {0, 1}}).flatten());
    ASSERT_EQ(rank(flat), 4u);
    EXPECT_THROW(sl2.recognize(mat(Q, {{1, 0}, {0, 1}})), NotInSpan);
}

TEST(Recognize, WrongShape) {
    auto gl2 = catalog::gl(2, Q);
    EXPECT_THROW(gl2.recognize(MatrixRep(Q, 3)), DimensionMismatch);
    EXPECT_THROW(gl2.recognize(MatrixRep(F2, 2)), CharacteristicMismatch);
}

TEST(Realize, Examples) {
    auto gl2 = catalog::gl(2, Q);
    EXPECT_EQ(gl2.realize(element(gl2, {1, 2, 0, 4})), mat(Q, {{1, 2}, {0, 4}}));
    EXPECT_TRUE(gl2.realize(gl2.zero()).is_zero());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(gl2.realize(gl2.basis_element(i)), gl2.basis()[i]);
    EXPECT_THROW(gl2.realize(AlgebraElement(CoordVector(Q, 3))), DimensionMismatch);
}

TEST(BracketElements, Examples) {
    auto gl2_2 = catalog::gl(2, F2);
    EXPECT_EQ(gl2_2.bracket(gl2_2.basis_element(1), gl2_2.basis_element(2)), element(gl2_2, {1, 0, 0, 1}));
    auto gl2_3 = catalog::gl(2, F3);
    EXPECT_EQ(gl2_3.bracket(gl2_3.basis_element(1), gl2_3.basis_element(2)), element(gl2_3, {1, 0, 0, 2}));

    std::mt19937_64 rng(3);
    auto gl3 = catalog::gl(3, Q);
    for (int i = 0; i < 20; ++i) {
        auto a = random_element(gl3, rng);
        EXPECT_TRUE(gl3.bracket(a, a).is_zero());
    }
}

TEST(StructureConstants, Gl2MatchesReferenceTable) {
    auto gl2 = catalog::gl(2, Q);
    auto table = gl2.multiplication_table();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_EQ(table[i][j], element(gl2, {kGl2Table[i][j][0], kGl2Table[i][j][1], kGl2Table[i][j][2],
                                                 kGl2Table[i][j][3]}))
                << "entry (" << i + 1 << ", " << j + 1 << ")";
}

TEST(StructureConstants, AbelianAlgebrasAreZero) {
    auto gl1 = catalog::gl(1, F3);
    EXPECT_TRUE(gl1.structure_constant(0, 0, 0).is_zero());

    // Oracle: multiply the diagonal matrices directly, both orders.
    auto e11 = mat(Q, {{1, 0}, {0, 0}}), e22 = mat(Q, {{0, 0}, {0, 1}});
    ASSERT_EQ(e11 * e22, e22 * e11);
    auto diag = catalog::diagonal(2, Q);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) EXPECT_TRUE(diag.structure_constant(i, j, k).is_zero());
}

TEST(MultiplicationTable, CharTwoEntryAndDiagonal) {
    auto gl2 = catalog::gl(2, F2);
    auto table = gl2.multiplication_table();
    EXPECT_EQ(table[1][2], element(gl2, {1, 0, 0, 1}));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(table[i][i].is_zero());
}

TEST(LieAlgebra, RejectsNonClosedBasis) {
    std::vector<MatrixRep> basis = {mat(Q, {{1, 0}, {0, 0}}), mat(Q, {{0, 1}, {0, 0}}), mat(Q, {{0, 0}, {1, 0}})};
    // Oracle: [x2, x3] = diag(1, -1) raises the rank of the flattened basis.
    CoordMatrix flat(Q, 4);
    for (const auto& b : basis) flat.append(b.flatten());
    auto before = rank(flat);
    flat.append(bracket(basis[1], basis[2]).flatten());
    ASSERT_EQ(rank(flat), before + 1);

    try {
        LieAlgebra::from_matrices("bad", Q, basis);
        FAIL() << "expected ClosureError";
    } catch (const ClosureError& e) {
        EXPECT_EQ(e.first(), 2u);
        EXPECT_EQ(e.second(), 3u);
    }
}

TEST(LieAlgebra, AcceptsSingleElementBasis) {
    auto L = LieAlgebra::from_matrices("x2", Q, {mat(Q, {{0, 1}, {0, 0}})});
    EXPECT_EQ(L.dimension(), 1u);
}

TEST(LieAlgebra, RejectsDependentBasis) {
    try {
        LieAlgebra::from_matrices("dup", F3, {mat(F3, {{1, 0}, {0, 0}}), mat(F3, {{0, 1}, {0, 0}}), mat(F3, {{2, 0}, {0, 0}})});
        FAIL() << "expected IndependenceError";
    } catch (const IndependenceError& e) {
        EXPECT_EQ(e.index(), 3u);
    }
}

TEST(LieAlgebra, ElementValidation) {
    auto gl2 = catalog::gl(2, F3);
    EXPECT_THROW(gl2.element(CoordVector(F3, 3)), DimensionMismatch);
    EXPECT_THROW(gl2.element(CoordVector(F2, 4)), CharacteristicMismatch);
    EXPECT_THROW(gl2.bracket(gl2.zero(), AlgebraElement(CoordVector(F2, 4))), CharacteristicMismatch);
}

TEST(LieAlgebra, FromStructureConstants) {
    auto gl2 = catalog::gl(2, F3);
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) c.push_back(gl2.structure_constant(i, j, k));
    auto abstract = LieAlgebra::from_structure_constants("abstract", F3, 4, c);
    EXPECT_FALSE(abstract.has_matrix_basis());
    EXPECT_EQ(abstract.multiplication_table(), gl2.multiplication_table());
    EXPECT_THROW(abstract.realize(abstract.zero()), Error);

    auto broken = c;
    broken[(1 * 4 + 2) * 4 + 0] = Scalar(F3, 2);  // c_23^1 no longer equals -c_32^1
    EXPECT_THROW(LieAlgebra::from_structure_constants("broken", F3, 4, broken), StructureError);

    // Antisymmetric but violating Jacobi: [x1,x2] = x3, [x1,x3] = x3, [x2,x3] = x1,
    // so [[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2] = [x2,x3] = x1.
    std::vector<Scalar> bad(27, Scalar::zero(Characteristic(0)));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long v) {
        bad[(i * 3 + j) * 3 + k] = Scalar(Characteristic(0), v);
        bad[(j * 3 + i) * 3 + k] = Scalar(Characteristic(0), -v);
    };
    set(0, 1, 2, 1);
    set(0, 2, 2, 1);
    set(1, 2, 0, 1);
    EXPECT_THROW(LieAlgebra::from_structure_constants("nonjacobi", Characteristic(0), 3, bad), StructureError);
}

TEST(LieAlgebraProperties, MatrixPathAgreesWithStructureConstants) {
    for (std::uint64_t p : {0, 2, 3, 5}) {
        Characteristic ch(p);
        for (const auto& L : {catalog::gl(3, ch), catalog::sl(3, ch), catalog::upper_triangular(3, ch)}) {
            for (std::size_t i = 0; i < L.dimension(); ++i)
                for (std::size_t j = 0; j < L.dimension(); ++j)
                    EXPECT_EQ(L.recognize(bracket(L.basis()[i], L.basis()[j])),
                              L.bracket(L.basis_element(i), L.basis_element(j)));
            EXPECT_FALSE(L.find_structure_violation()) << L.name() << " char " << p;
        }
    }
}

TEST(LieAlgebraProperties, RandomElementsAntisymmetryJacobiRoundTrip) {
    std::mt19937_64 rng(17);
    for (std::uint64_t p : {0, 3, 5}) {
        auto L = catalog::gl(3, Characteristic(p));
        for (int trial = 0; trial < 70; ++trial) {
            auto a = random_element(L, rng), b = random_element(L, rng), c = random_element(L, rng);
            EXPECT_EQ(L.bracket(a, b), -L.bracket(b, a));
            auto jacobi = L.bracket(a, L.bracket(b, c)) + L.bracket(b, L.bracket(c, a)) + L.bracket(c, L.bracket(a, b));
            EXPECT_TRUE(jacobi.is_zero());
            EXPECT_EQ(L.recognize(L.realize(a)), a);
            EXPECT_EQ(L.recognize(bracket(L.realize(a), L.realize(b))), L.bracket(a, b));
        }
    }
}

TEST(LieAlgebraProperties, Gl3BasisTriplesExhaustive) {
    for (std::uint64_t p : {2, 3, 5}) {
        auto L = catalog::gl(3, Characteristic(p));
        const std::size_t n = L.dimension();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto xi = L.basis_element(i), xj = L.basis_element(j);
                ASSERT_EQ(L.bracket(xi, xj), -L.bracket(xj, xi));
                for (std::size_t k = 0; k < n; ++k) {
                    const auto xk = L.basis_element(k);
                    ASSERT_TRUE((L.bracket(xi, L.bracket(xj, xk)) + L.bracket(xj, L.bracket(xk, xi)) +
                                 L.bracket(xk, L.bracket(xi, xj)))
                                    .is_zero())
                        << "p=" << p << " (" << i << ", " << j << ", " << k << ")";
                }
            }
    }
}

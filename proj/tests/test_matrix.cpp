#include <gtest/gtest.h>

#include "cliffgrass/error.hpp"
#include "cliffgrass/golden.hpp"
#include "cliffgrass/linalg.hpp"
#include "cliffgrass/matrix.hpp"
#include "cliffgrass/rng.hpp"
#include "cliffgrass/spin.hpp"

namespace cliffgrass {
namespace {

Matrix random_matrix(RationalSampler& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.rational();
    }
    return m;
}

TEST(Matrix, Arithmetic) {
    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
    EXPECT_EQ(a * b, Matrix::from_rows({{2, 1}, {4, 3}}));
    EXPECT_EQ(a + b, Matrix::from_rows({{1, 3}, {4, 4}}));
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_EQ(a.transposed().transposed(), a);
    EXPECT_EQ(a.scaled(Rational(2)), Matrix::from_rows({{2, 4}, {6, 8}}));
}

TEST(Matrix, ShapeErrors) {
    const Matrix a(2, 3);
    const Matrix b(2, 3);
    EXPECT_THROW(a * b, DimensionError);
    EXPECT_THROW(a + Matrix(3, 2), DimensionError);
    EXPECT_THROW(commutator(Matrix(2, 3), Matrix(2, 3)), DimensionError);
    EXPECT_THROW(classify_operator(a), DimensionError);
}

TEST(Matrix, Blocks) {
    const Matrix id = Matrix::identity(2);
    const Matrix z(2, 2);
    const Matrix m = Matrix::block2x2(id, z, z, -id);
    EXPECT_EQ(m.at(0, 0), Rational(1));
    EXPECT_EQ(m.at(3, 3), Rational(-1));
    EXPECT_EQ(m.block(2, 2, 2, 2), -id);
    EXPECT_EQ(Matrix::block_diagonal(id, 3), Matrix::identity(6));
}

TEST(Rank, KnownValues) {
    // proportional rows collapse to rank 1
    EXPECT_EQ(rank_exact(Matrix::from_rows({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank_exact(Matrix::identity(16)), 16u);

    // the 28 spin(8) generators, vectorized and stacked, are independent
    const auto basis = spin::spin8_basis();
    Matrix stacked(28, 256);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& entries = basis[k].matrix.entries();
        for (std::size_t c = 0; c < 256; ++c) stacked.at(k, c) = entries[c];
    }
    EXPECT_EQ(rank_exact(stacked), 28u);
}

TEST(Rank, TransposeInvariantAndCrossRoute) {
    RationalSampler rng(3);
    for (int t = 0; t < 25; ++t) {
        const Matrix m = random_matrix(rng, 1 + t % 6, 1 + (t * 7) % 6);
        const std::size_t rk = rank_exact(m);
        EXPECT_EQ(rk, rank_exact(m.transposed()));
        RowEchelon ech(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::vector<Rational> row(m.cols());
            for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.at(r, c);
            ech.insert(std::move(row));
        }
        EXPECT_EQ(rk, ech.dimension());
    }
}

TEST(Span, KnownValues) {
    const Matrix id = Matrix::identity(16);
    const std::vector<Matrix> pair = {id, id.scaled(Rational(2))};
    EXPECT_EQ(span_dimension(pair), 1u);

    std::vector<Matrix> basis;
    for (const auto& g : spin::spin8_basis()) basis.push_back(g.matrix);
    EXPECT_EQ(span_dimension(basis), 28u);

    EXPECT_THROW(span_dimension(std::vector<Matrix>{}), DimensionError);
    const std::vector<Matrix> mixed = {Matrix(2, 2), Matrix(3, 3)};
    EXPECT_THROW(span_dimension(mixed), DimensionError);
}

TEST(Commutator, KnownValues) {
    RationalSampler rng(5);
    const Matrix m = random_matrix(rng, 4, 4);
    EXPECT_TRUE(commutator(Matrix::identity(4), m).is_zero());

    // frozen by hand from the quaternion table: [m_{1,i}, m_{1,j}] = 2 m_{i,j}
    EXPECT_EQ(commutator(golden::m_pair(0, 1), golden::m_pair(0, 2)),
              golden::m_pair(1, 2).scaled(2));

    EXPECT_TRUE(commutator(golden::sigma_pair(1, 2), golden::sigma_pair(3, 4)).is_zero());
}

TEST(Classify, OperatorFamilies) {
    const auto m1 = classify_operator(golden::m_single(0));
    EXPECT_TRUE(m1.orthogonal && m1.skew && m1.complex_structure);
    EXPECT_FALSE(m1.symmetric || m1.involution);

    const auto i1 = classify_operator(golden::involution(0));
    EXPECT_TRUE(i1.orthogonal && i1.symmetric && i1.involution);
    EXPECT_FALSE(i1.skew || i1.complex_structure);

    const auto zero = classify_operator(Matrix(3, 3));
    EXPECT_TRUE(zero.symmetric && zero.skew);
    EXPECT_FALSE(zero.orthogonal || zero.involution || zero.complex_structure);
}

TEST(Classify, ComplexStructureImpliesFullEvenRank) {
    const Matrix j = spin::std_complex_structure(8);
    const auto flags = classify_operator(j);
    EXPECT_TRUE(flags.complex_structure);
    EXPECT_EQ(rank_exact(j), 8u);
    EXPECT_EQ(j.rows() % 2, 0u);
}

TEST(RowEchelon, MembershipAndInsertion) {
    RowEchelon ech(3);
    EXPECT_TRUE(ech.insert({Rational(1), Rational(2), Rational(3)}));
    EXPECT_FALSE(ech.insert({Rational(2), Rational(4), Rational(6)}));
    EXPECT_TRUE(ech.insert({Rational(0), Rational(1), Rational(1)}));
    EXPECT_EQ(ech.dimension(), 2u);
    EXPECT_TRUE(ech.contains({Rational(1), Rational(3), Rational(4)}));
    EXPECT_FALSE(ech.contains({Rational(0), Rational(0), Rational(1)}));
}

TEST(Solve, UniqueAndDegenerate) {
    const Matrix a = Matrix::from_rows({{2, 0}, {0, 4}});
    const std::vector<Rational> b = {Rational(1), Rational(2)};
    const auto sol = solve_exact(a, b);
    ASSERT_TRUE(sol.consistent && sol.unique);
    EXPECT_EQ(sol.values[0], Rational(1, 2));
    EXPECT_EQ(sol.values[1], Rational(1, 2));

    const Matrix singular = Matrix::from_rows({{1, 1}, {2, 2}});
    const auto inconsistent = solve_exact(singular, std::vector<Rational>{Rational(1), Rational(3)});
    EXPECT_FALSE(inconsistent.consistent);
    const auto underdetermined =
        solve_exact(singular, std::vector<Rational>{Rational(1), Rational(2)});
    EXPECT_TRUE(underdetermined.consistent);
    EXPECT_FALSE(underdetermined.unique);
}

TEST(Solve, RandomRoundTrip) {
    RationalSampler rng(17);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.integer(1, 5));
        const Matrix a = random_matrix(rng, n, n);
        std::vector<Rational> x(n);
        for (auto& v : x) v = rng.rational();
        const auto b = a.apply(x);
        const auto sol = solve_exact(a, b);
        ASSERT_TRUE(sol.consistent);
        if (sol.unique) {
            EXPECT_EQ(sol.values, x);
        } else {
            EXPECT_TRUE(sol.values.empty());  // singular draw: solution not pinned
        }
    }
}

}  // namespace
}  // namespace cliffgrass

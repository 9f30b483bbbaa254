#include <gtest/gtest.h>

#include "cliffgrass/error.hpp"
#include "cliffgrass/golden.hpp"
#include "cliffgrass/octonion.hpp"
#include "cliffgrass/rng.hpp"

namespace cliffgrass {
namespace {

TEST(Quaternion, HamiltonTable) {
    const Quaternion i = Quaternion::basis(1);
    const Quaternion j = Quaternion::basis(2);
    const Quaternion k = Quaternion::basis(3);
    EXPECT_EQ(i * j, k);
    EXPECT_EQ(j * i, -k);
    EXPECT_EQ(j * k, i);
    EXPECT_EQ(k * i, j);
    EXPECT_EQ(i * i, -Quaternion::basis(0));
}

TEST(Quaternion, MultMatricesMatchGolden) {
    for (std::size_t t = 1; t <= 3; ++t) {
        EXPECT_EQ(Quaternion::right_mult_matrix(Quaternion::basis(t)), golden::quat_right(t));
        EXPECT_EQ(Quaternion::left_mult_matrix(Quaternion::basis(t)), golden::quat_left(t));
    }
}

TEST(Octonion, BasisTableExamples) {
    // i * j = k: the column of the right multiplication by j sends i to k
    EXPECT_EQ(Octonion::basis(1) * Octonion::basis(2), Octonion::basis(3));
    // e * f = i
    EXPECT_EQ(Octonion::basis(4) * Octonion::basis(5), Octonion::basis(1));
    // unit law on random rationals
    RationalSampler rng(23);
    for (int t = 0; t < 100; ++t) {
        const Octonion x = rng.octonion();
        EXPECT_EQ(Octonion::basis(0) * x, x);
        EXPECT_EQ(x * Octonion::basis(0), x);
    }
}

TEST(Octonion, ConjAndNorm) {
    Octonion one_plus_i = Octonion::basis(0) + Octonion::basis(1);
    EXPECT_EQ(one_plus_i.conj(), Octonion::basis(0) - Octonion::basis(1));

    std::array<Rational, 8> ones;
    ones.fill(Rational(1));
    EXPECT_EQ(Octonion(ones).norm_sq(), Rational(8));

    RationalSampler rng(29);
    for (int t = 0; t < 200; ++t) {
        const Octonion a = rng.octonion();
        EXPECT_EQ(a * a.conj(), a.norm_sq() * Octonion::basis(0));
    }
}

TEST(Octonion, CompositionAlgebraLaw) {
    RationalSampler rng(31);
    for (int t = 0; t < 300; ++t) {
        const Octonion a = rng.octonion();
        const Octonion b = rng.octonion();
        EXPECT_EQ((a * b).norm_sq(), a.norm_sq() * b.norm_sq());
    }
}

TEST(Octonion, Alternativity) {
    RationalSampler rng(37);
    for (int t = 0; t < 200; ++t) {
        const Octonion x = rng.octonion();
        const Octonion y = rng.octonion();
        EXPECT_EQ(x * (x * y), (x * x) * y);
        EXPECT_EQ((y * x) * x, y * (x * x));
    }
}

TEST(Octonion, MoufangIdentity) {
    RationalSampler rng(41);
    for (int t = 0; t < 150; ++t) {
        const Octonion x = rng.octonion();
        const Octonion y = rng.octonion();
        const Octonion z = rng.octonion();
        EXPECT_EQ((z * (x * y)) * z, (z * x) * (y * z));
    }
}

TEST(MultMatrix, GoldenColumns) {
    EXPECT_EQ(right_mult_matrix(Octonion::basis(0)), Matrix::identity(8));
    // R_i is block diag(R^H_i, -R^H_i) and R_e swaps the quaternion halves
    EXPECT_EQ(right_mult_matrix(Octonion::basis(1)), golden::oct_right(1));
    EXPECT_EQ(right_mult_matrix(Octonion::basis(4)), golden::oct_right(4));
    for (std::size_t u = 1; u < 8; ++u) {
        EXPECT_EQ(right_mult_matrix(Octonion::basis(u)), golden::oct_right(u));
    }
}

TEST(MultMatrix, ActionMatchesProduct) {
    RationalSampler rng(43);
    for (int t = 0; t < 50; ++t) {
        const Octonion x = rng.octonion();
        const Octonion u = rng.octonion();
        const auto via_matrix = right_mult_matrix(u).apply(
            std::span<const Rational>(x.coords().data(), 8));
        const Octonion product = x * u;
        for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(via_matrix[c], product.coord(c));

        const auto via_left = left_mult_matrix(u).apply(
            std::span<const Rational>(x.coords().data(), 8));
        const Octonion left_product = u * x;
        for (std::size_t c = 0; c < 8; ++c) EXPECT_EQ(via_left[c], left_product.coord(c));
    }
}

TEST(MultMatrix, ConjugateInverseLaw) {
    RationalSampler rng(47);
    for (int t = 0; t < 100; ++t) {
        const Octonion u = rng.octonion();
        EXPECT_EQ(right_mult_matrix(u) * right_mult_matrix(u.conj()),
                  Matrix::identity(8).scaled(u.norm_sq()));
    }
}

TEST(OrthogonalIdentity, HoldsForOrthogonalPairs) {
    // z = j, u = 1, v = i
    EXPECT_TRUE(orthogonal_identity_check(Octonion::basis(2), Octonion::basis(0),
                                          Octonion::basis(1)));
    // u = v = i violates the precondition
    EXPECT_THROW(orthogonal_identity_check(Octonion::basis(2), Octonion::basis(1),
                                           Octonion::basis(1)),
                 PreconditionError);

    RationalSampler rng(53);
    for (int t = 0; t < 100; ++t) {
        const Octonion z = rng.octonion();
        const Octonion u = rng.nonzero_octonion();
        const Octonion v = rng.orthogonal_to(u);
        ASSERT_TRUE(inner(u, v).is_zero());
        EXPECT_TRUE(orthogonal_identity_check(z, u, v));
    }
}

TEST(Sampler, UnitOctonionsAreExactlyUnit) {
    RationalSampler rng(59);
    for (int t = 0; t < 50; ++t) {
        EXPECT_TRUE(rng.unit_octonion().norm_sq().is_one());
    }
}

}  // namespace
}  // namespace cliffgrass

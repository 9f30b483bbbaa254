#include <gtest/gtest.h>

#include <bit>

#include "cliffgrass/error.hpp"
#include "cliffgrass/even_clifford.hpp"
#include "cliffgrass/golden.hpp"
#include "cliffgrass/linalg.hpp"
#include "cliffgrass/rng.hpp"

namespace cliffgrass {
namespace {

using clifford::EvenCliffordElement;
using clifford::StructureKind;
using clifford::Subset;
using clifford::TangentModel;

TEST(EvenBasis, CountsAndOrder) {
    EXPECT_EQ(clifford::even_basis(8).size(), 128u);
    EXPECT_EQ(clifford::even_basis(6).size(), 32u);
    EXPECT_EQ(clifford::even_basis(5).size(), 16u);
    EXPECT_THROW(clifford::even_basis(4), ValidationError);

    const auto b6 = clifford::even_basis(6);
    EXPECT_EQ(b6.front(), Subset(0));  // the unit comes first
    // cardinality-major order: all pairs precede all 4-subsets
    bool seen_four = false;
    for (const auto s : b6) {
        const int card = std::popcount(s);
        EXPECT_EQ(card % 2, 0);
        if (card == 4) seen_four = true;
        if (seen_four) EXPECT_GE(card, 4);
    }
    const Subset s1234 = clifford::subset_from_indices({1, 2, 3, 4}, 6);
    EXPECT_NE(std::find(b6.begin(), b6.end(), s1234), b6.end());
}

TEST(EvenBasis, SubsetCodecs) {
    const Subset s = clifford::subset_from_indices({2, 5}, 8);
    EXPECT_EQ(clifford::subset_indices(s), (std::vector<std::size_t>{2, 5}));
    EXPECT_EQ(clifford::subset_label(s), "e2e5");
    EXPECT_EQ(clifford::subset_label(0), "1");
    EXPECT_THROW(clifford::subset_from_indices({0}, 8), ValidationError);
    EXPECT_THROW(clifford::subset_from_indices({9}, 8), ValidationError);
    EXPECT_THROW(clifford::subset_from_indices({1, 1}, 8), ValidationError);
}

TEST(EvenMul, GeneratorRelations) {
    const auto e12 = EvenCliffordElement::generator_pair(8, 1, 2);
    const auto e23 = EvenCliffordElement::generator_pair(8, 2, 3);
    const auto e13 = EvenCliffordElement::generator_pair(8, 1, 3);
    const auto unit = EvenCliffordElement::unit(8);

    EXPECT_EQ(e12 * e23, Rational(-1) * e13);
    EXPECT_EQ(e12 * e12, Rational(-1) * unit);

    RationalSampler rng(79);
    const auto x = rng.even_element(8, 4);
    EXPECT_EQ(unit * x, x);
    EXPECT_EQ(x * unit, x);
}

TEST(EvenMul, RankMismatchAndParityGuard) {
    const auto a = EvenCliffordElement::unit(8);
    const auto b = EvenCliffordElement::unit(6);
    EXPECT_THROW(a * b, ValidationError);
    EvenCliffordElement odd(8);
    EXPECT_THROW(odd.add_term(Subset(1), Rational(1)), ValidationError);
}

TEST(EvenMul, AssociativeAndDistributive) {
    RationalSampler rng(83);
    for (int t = 0; t < 40; ++t) {
        const auto a = rng.even_element(5, 3);
        const auto b = rng.even_element(5, 3);
        const auto c = rng.even_element(5, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(BladeProduct, SignTable) {
    // e1e2 * e2e3 = -e1e3 at the mask level
    const auto [mask, sign] = clifford::blade_product(0b011, 0b110);
    EXPECT_EQ(mask, Subset(0b101));
    EXPECT_EQ(sign, -1);
    // squares of pairs contract to -1
    const auto [zero_mask, sq_sign] = clifford::blade_product(0b011, 0b011);
    EXPECT_EQ(zero_mask, Subset(0));
    EXPECT_EQ(sq_sign, -1);
}

TEST(PairMatrices, MatchGoldenFixtures) {
    for (std::size_t s = 1; s <= 8; ++s) {
        for (std::size_t t = s + 1; t <= 8; ++t) {
            EXPECT_EQ(clifford::generator_pair_matrix(StructureKind::rank8, s, t),
                      golden::m_pair(s - 1, t - 1));
        }
    }
    // rank6 restricts the same matrices to the first six generators
    EXPECT_EQ(clifford::generator_pair_matrix(StructureKind::rank6, 1, 6),
              golden::m_pair(0, 5));
    EXPECT_THROW(clifford::generator_pair_matrix(StructureKind::rank6, 1, 7), ValidationError);
    // rank5 pairs are the negated sigma compositions
    for (std::size_t s = 1; s <= 5; ++s) {
        for (std::size_t t = s + 1; t <= 5; ++t) {
            EXPECT_EQ(clifford::generator_pair_matrix(StructureKind::rank5, s, t),
                      -golden::sigma_pair(s, t));
        }
    }
}

TEST(PhiApply, GeneratorPairAction) {
    TangentModel t;
    t.kind = StructureKind::rank8;
    std::vector<Rational> block(16);
    block[0] = 1;
    t.blocks.push_back(block);

    const auto image = clifford::phi_apply(StructureKind::rank8,
                                           EvenCliffordElement::generator_pair(8, 1, 2), t);
    std::vector<Rational> expected(16);
    expected[1] = 1;
    EXPECT_EQ(image.blocks.front(), expected);

    EXPECT_EQ(clifford::phi_apply(StructureKind::rank8, EvenCliffordElement::unit(8), t), t);
}

TEST(PhiApply, MorphismPropertyOnModels) {
    RationalSampler rng(89);
    const auto e12 = EvenCliffordElement::generator_pair(8, 1, 2);
    const auto e23 = EvenCliffordElement::generator_pair(8, 2, 3);
    const auto e13 = EvenCliffordElement::generator_pair(8, 1, 3);
    TangentModel t;
    t.kind = StructureKind::rank8;
    for (int b = 0; b < 2; ++b) {
        std::vector<Rational> block(16);
        for (auto& x : block) x = rng.rational();
        t.blocks.push_back(std::move(block));
    }
    const auto lhs = clifford::phi_apply(StructureKind::rank8, e12 * e23, t);
    const auto rhs = clifford::phi_apply(StructureKind::rank8, Rational(-1) * e13, t);
    EXPECT_EQ(lhs, rhs);
}

TEST(PhiApply, ValidationErrors) {
    TangentModel t;
    t.kind = StructureKind::rank5;
    t.blocks.push_back(std::vector<Rational>(8));
    EXPECT_THROW(
        clifford::phi_apply(StructureKind::rank8, EvenCliffordElement::unit(8), t),
        ValidationError);

    TangentModel bad;
    bad.kind = StructureKind::rank8;
    bad.blocks.push_back(std::vector<Rational>(8));  // wrong block dimension
    EXPECT_THROW(
        clifford::phi_apply(StructureKind::rank8, EvenCliffordElement::unit(8), bad),
        DimensionError);
}

TEST(Lambda2, AllRanksAndSizes) {
    for (const auto kind :
         {StructureKind::rank8, StructureKind::rank6, StructureKind::rank5}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto report = clifford::lambda2_image_check(kind, n);
            EXPECT_TRUE(report.all_passed)
                << clifford::kind_name(kind) << " n=" << n << " first violation "
                << (report.violations.empty() ? "-" : report.violations.front());
        }
    }
}

TEST(Morphism, AllRanksAndSizes) {
    EXPECT_TRUE(clifford::morphism_check(StructureKind::rank5, 1));
    EXPECT_TRUE(clifford::morphism_check(StructureKind::rank6, 2));
    EXPECT_TRUE(clifford::morphism_check(StructureKind::rank8, 1));
    EXPECT_TRUE(clifford::morphism_check(StructureKind::rank5, 3));
}

TEST(Morphism, Rank5SignIsForced) {
    // with the opposite sign the pair images fail the even Clifford
    // relations: (+sigma_1 sigma_2)(+sigma_2 sigma_3) = +sigma_1 sigma_3,
    // but e1e2 e2e3 = -e1e3 demands the minus
    const Matrix wrong12 = golden::sigma_pair(1, 2);
    const Matrix wrong23 = golden::sigma_pair(2, 3);
    const Matrix wrong13 = golden::sigma_pair(1, 3);
    EXPECT_NE(wrong12 * wrong23, -wrong13);
    const Matrix right12 = -golden::sigma_pair(1, 2);
    const Matrix right23 = -golden::sigma_pair(2, 3);
    const Matrix right13 = -golden::sigma_pair(1, 3);
    EXPECT_EQ(right12 * right23, -right13);
}

TEST(PhiModelMatrix, BlockDiagonalStructure) {
    RationalSampler rng(97);
    const auto elem = rng.even_element(5, 3);
    const Matrix block = clifford::phi_block_matrix(StructureKind::rank5, elem);
    const Matrix model = clifford::phi_model_matrix(StructureKind::rank5, elem, 3);
    EXPECT_EQ(model, Matrix::block_diagonal(block, 3));
    EXPECT_EQ(model.rows(), 24u);
}

TEST(ImageSpan, Rank8EvenAlgebraFillsBothBlocks) {
    std::vector<Matrix> images;
    for (const auto s : clifford::even_basis(8)) {
        EvenCliffordElement elem(8);
        elem.add_term(s, 1);
        images.push_back(clifford::phi_block_matrix(StructureKind::rank8, elem));
    }
    EXPECT_EQ(span_dimension(images), 128u);
}

}  // namespace
}  // namespace cliffgrass

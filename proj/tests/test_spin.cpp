#include <gtest/gtest.h>

#include "cliffgrass/error.hpp"
#include "cliffgrass/golden.hpp"
#include "cliffgrass/linalg.hpp"
#include "cliffgrass/rng.hpp"
#include "cliffgrass/spin.hpp"

namespace cliffgrass {
namespace {

using spin::SystemKind;

TEST(BuildMu, GoldenFixtures) {
    for (std::size_t u = 0; u < 8; ++u) {
        EXPECT_EQ(spin::build_m_u(Octonion::basis(u)), golden::m_single(u));
    }
}

TEST(BuildMu, RationalUnitVectorSquaresToMinusId) {
    std::array<Rational, 8> c;
    c[0] = Rational(3, 5);
    c[1] = Rational(4, 5);
    const Octonion u(c);
    ASSERT_TRUE(u.norm_sq().is_one());
    const Matrix m = spin::build_m_u(u);
    EXPECT_EQ(m * m, -Matrix::identity(16));
}

TEST(BuildMu, SquareLaw) {
    RationalSampler rng(61);
    for (int t = 0; t < 50; ++t) {
        const Octonion u = rng.octonion();
        const Matrix m = spin::build_m_u(u);
        EXPECT_EQ(m * m, Matrix::identity(16).scaled(-u.norm_sq()));
    }
}

TEST(BuildMuv, GoldenFixtures) {
    for (std::size_t u = 0; u < 8; ++u) {
        for (std::size_t v = u + 1; v < 8; ++v) {
            EXPECT_EQ(spin::build_m_uv(Octonion::basis(u), Octonion::basis(v)),
                      golden::m_pair(u, v));
        }
    }
    // m_{u,u} with unit u collapses to -Id
    EXPECT_EQ(spin::build_m_uv(Octonion::basis(3), Octonion::basis(3)), -Matrix::identity(16));
}

TEST(BuildMuv, EqualsComposition) {
    RationalSampler rng(67);
    for (int t = 0; t < 30; ++t) {
        const Octonion u = rng.octonion();
        const Octonion v = rng.octonion();
        EXPECT_EQ(spin::build_m_uv(u, v), spin::build_m_u(u) * spin::build_m_u(v));
    }
}

TEST(BuildMuv, AntisymmetryForOrthogonalArguments) {
    RationalSampler rng(71);
    for (int t = 0; t < 50; ++t) {
        const Octonion u = rng.nonzero_octonion();
        const Octonion v = rng.orthogonal_to(u);
        EXPECT_EQ(spin::build_m_uv(v, u), -spin::build_m_uv(u, v));
    }
}

TEST(Spin8Basis, LabelsAndSpan) {
    const auto basis = spin::spin8_basis();
    ASSERT_EQ(basis.size(), 28u);
    EXPECT_EQ(basis.front().label, "m_{1,i}");
    EXPECT_EQ(basis.back().label, "m_{g,h}");
    std::vector<Matrix> ms;
    for (const auto& g : basis) ms.push_back(g.matrix);
    EXPECT_EQ(span_dimension(ms), 28u);
    for (const auto& g : basis) {
        const auto flags = classify_operator(g.matrix);
        EXPECT_TRUE(flags.orthogonal && flags.skew && flags.complex_structure) << g.label;
    }
}

TEST(CliffordSystem, KnownSystems) {
    const auto spin8 = spin::clifford_system(SystemKind::spin8);
    ASSERT_EQ(spin8.involutions.size(), 8u);
    EXPECT_EQ(spin8.composition_sign, -1);
    // I_1 = [[0, -Id], [-Id, 0]]
    EXPECT_EQ(spin8.involutions[0], golden::involution(0));

    const auto spin6 = spin::clifford_system(SystemKind::spin6);
    ASSERT_EQ(spin6.involutions.size(), 6u);
    for (std::size_t u = 0; u < 6; ++u) {
        EXPECT_EQ(spin6.involutions[u], spin8.involutions[u]);
    }

    const auto spin5 = spin::clifford_system(SystemKind::spin5);
    ASSERT_EQ(spin5.involutions.size(), 5u);
    EXPECT_EQ(spin5.composition_sign, +1);
    const Matrix sigma5 = Matrix::block2x2(Matrix::identity(4), Matrix(4, 4), Matrix(4, 4),
                                           -Matrix::identity(4));
    EXPECT_EQ(spin5.involutions[4], sigma5);
}

TEST(CliffordSystem, MembersAnticommuteAndInvolute) {
    for (const auto kind : {SystemKind::spin8, SystemKind::spin6, SystemKind::spin5}) {
        const auto system = spin::clifford_system(kind);
        for (std::size_t s = 0; s < system.involutions.size(); ++s) {
            const auto flags = classify_operator(system.involutions[s]);
            EXPECT_TRUE(flags.symmetric && flags.orthogonal && flags.involution);
            for (std::size_t t = s + 1; t < system.involutions.size(); ++t) {
                EXPECT_EQ(system.involutions[s] * system.involutions[t],
                          -(system.involutions[t] * system.involutions[s]));
            }
        }
    }
}

TEST(ComposeSystem, MatchesGoldenCompositions) {
    const auto spin8 = spin::clifford_system(SystemKind::spin8);
    const auto composed = spin::compose_system(spin8);
    const auto basis = spin::spin8_basis();
    ASSERT_EQ(composed.size(), 28u);
    for (std::size_t k = 0; k < 28; ++k) {
        EXPECT_EQ(composed[k].matrix, basis[k].matrix) << composed[k].label;
    }

    const auto spin5 = spin::clifford_system(SystemKind::spin5);
    const auto sigmas = spin::compose_system(spin5);
    ASSERT_EQ(sigmas.size(), 10u);
    for (const auto& g : sigmas) {
        EXPECT_EQ(g.matrix, golden::sigma_pair(g.first + 1, g.second + 1)) << g.label;
    }
    // sigma_15 = [[0, -Id], [Id, 0]]
    const Matrix expected = Matrix::block2x2(Matrix(4, 4), -Matrix::identity(4),
                                             Matrix::identity(4), Matrix(4, 4));
    EXPECT_EQ(sigmas[3].label, "sigma_15");
    EXPECT_EQ(sigmas[3].matrix, expected);

    const auto spin6 = spin::clifford_system(SystemKind::spin6);
    const auto fifteen = spin::compose_system(spin6);
    ASSERT_EQ(fifteen.size(), 15u);
    std::vector<Matrix> ms;
    for (const auto& g : fifteen) ms.push_back(g.matrix);
    EXPECT_EQ(span_dimension(ms), 15u);
}

TEST(LieClosure, KnownDimensions) {
    std::vector<Matrix> basis28;
    for (const auto& g : spin::spin8_basis()) basis28.push_back(g.matrix);
    auto report = spin::lie_closure_report(basis28);
    EXPECT_EQ(report.dimension, 28u);
    EXPECT_TRUE(report.closed);

    std::vector<Matrix> basis21;
    for (const auto& g : spin::spin7_delta_basis()) basis21.push_back(g.matrix);
    report = spin::lie_closure_report(basis21);
    EXPECT_EQ(report.dimension, 21u);
    EXPECT_TRUE(report.closed);

    std::vector<Matrix> sigmas;
    for (const auto& g : spin::compose_system(spin::clifford_system(SystemKind::spin5))) {
        sigmas.push_back(g.matrix);
    }
    report = spin::lie_closure_report(sigmas);
    EXPECT_EQ(report.dimension, 10u);
    EXPECT_TRUE(report.closed);

    // a non-closed set: a single generator pair plus a clearly foreign one
    const std::vector<Matrix> open_set = {basis28[0].scaled(1), spin::build_m_u(Octonion::basis(0))};
    EXPECT_FALSE(spin::lie_closure_report(open_set).closed);
}

TEST(Triality, BasisCompanions) {
    const auto basis = spin::spin8_basis();
    for (const auto& g : basis) {
        const auto triple = spin::triality_companion(g.matrix);
        EXPECT_EQ(triple.m_zero.transposed(), -triple.m_zero) << g.label;
        for (std::size_t b = 0; b < 8; ++b) {
            std::array<Rational, 8> coords;
            for (std::size_t r = 0; r < 8; ++r) coords[r] = triple.m_zero.at(r, b);
            const Matrix rv = right_mult_matrix(Octonion(coords));
            const Matrix ru = right_mult_matrix(Octonion::basis(b));
            EXPECT_EQ(rv + ru * triple.m_minus, triple.m_plus * ru) << g.label;
        }
    }
}

TEST(Triality, FrozenCompanionForM1i) {
    const auto triple = spin::triality_companion(golden::m_pair(0, 1));
    EXPECT_EQ(triple.m_plus, golden::oct_right(1));
    EXPECT_EQ(triple.m_minus, -golden::oct_right(1));
    Matrix expected(8, 8);
    expected.at(1, 0) = 2;
    expected.at(0, 1) = -2;
    EXPECT_EQ(triple.m_zero, expected);
}

TEST(Triality, Delta7Characterization) {
    const auto basis = spin::spin8_basis();
    for (const auto& g : basis) {
        EXPECT_EQ(spin::is_spin_delta7(g.matrix), g.first != 0) << g.label;
    }
    // linear combinations of the 21 stay diagonal-equal
    RationalSampler rng(73);
    Matrix combo(16, 16);
    for (const auto& g : spin::spin7_delta_basis()) combo += g.matrix.scaled(rng.rational());
    EXPECT_TRUE(spin::is_spin_delta7(combo));
}

TEST(Triality, RejectsOutsiders) {
    Matrix sym(16, 16);
    for (std::size_t i = 0; i < 16; ++i) sym.at(i, i) = 1;
    EXPECT_THROW(spin::triality_companion(sym), NotInSpin8Error);
    EXPECT_THROW(spin::triality_companion(spin::build_m_u(Octonion::basis(0))), NotInSpin8Error);
    EXPECT_THROW(spin::triality_companion(Matrix(8, 8)), NotInSpin8Error);
    EXPECT_THROW(spin::is_spin_delta7(spin::build_m_u(Octonion::basis(2))), NotInSpin8Error);

    // block diagonal skew but not in the span: generic so(8) x so(8) element
    Matrix skew(16, 16);
    skew.at(0, 1) = 1;
    skew.at(1, 0) = -1;
    EXPECT_THROW(spin::triality_companion(skew), NotInSpin8Error);
}

TEST(Complexify, GoldenFixtures) {
    EXPECT_EQ(spin::complexify(right_mult_matrix(Octonion::basis(0))), ComplexMatrix::identity(4));
    for (std::size_t u = 1; u <= 5; ++u) {
        EXPECT_EQ(spin::complexify(right_mult_matrix(Octonion::basis(u))),
                  golden::su4_generator(u));
    }
    EXPECT_THROW(spin::complexify(right_mult_matrix(Octonion::basis(6))), NotComplexLinearError);
    EXPECT_THROW(spin::complexify(right_mult_matrix(Octonion::basis(7))), NotComplexLinearError);
    EXPECT_THROW(spin::complexify(Matrix(3, 3)), DimensionError);
}

TEST(Complexify, RoundTripAgainstRealAction) {
    // complexified matrix entries are read straight off the real action
    const Matrix m = right_mult_matrix(Octonion::basis(2));
    const ComplexMatrix c = spin::complexify(m);
    for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t t = 0; t < 4; ++t) {
            EXPECT_EQ(c.at(s, t).re, m.at(2 * s, 2 * t));
            EXPECT_EQ(c.at(s, t).im, m.at(2 * s + 1, 2 * t));
        }
    }
}

}  // namespace
}  // namespace cliffgrass

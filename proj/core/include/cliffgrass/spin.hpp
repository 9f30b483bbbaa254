#pragma once

#include <span>
#include <string>
#include <vector>

#include "cliffgrass/gauss_complex.hpp"
#include "cliffgrass/matrix.hpp"
#include "cliffgrass/octonion.hpp"

namespace cliffgrass::spin {

/// 16x16 block matrix [[0, R_u], [-R_conj(u), 0]]. Squares to -|u|^2 Id, so
/// unit u gives a complex structure.
Matrix build_m_u(const Octonion& u);

/// Composition m_u m_v = [[-R_u R_conj(v), 0], [0, -R_conj(u) R_v]].
/// For orthonormal u, v this is a complex structure and m_{v,u} = -m_{u,v}.
Matrix build_m_uv(const Octonion& u, const Octonion& v);

struct SpinGenerator {
    std::string label;
    std::size_t first = 0;
    std::size_t second = 0;
    Matrix matrix;
};

/// The 28 generators m_{u,v} over increasing pairs of basis octonions.
std::vector<SpinGenerator> spin8_basis();

/// The 21 generators with both indices imaginary (the diagonal subalgebra).
std::vector<SpinGenerator> spin7_delta_basis();

enum class SystemKind { spin8, spin6, spin5 };

/// Ordered system of self-dual anticommuting involutions plus the sign that
/// relates pair compositions to the published complex structures:
/// m_{u,v} = -I_u I_v for spin8/spin6 but sigma_{ab} = +sigma_a sigma_b.
struct CliffordSystem {
    SystemKind kind;
    std::vector<Matrix> involutions;
    std::vector<std::string> labels;
    int composition_sign = -1;
};

CliffordSystem clifford_system(SystemKind kind);

/// All signed pairwise compositions over increasing index pairs.
std::vector<SpinGenerator> compose_system(const CliffordSystem& cs);

/// Triality companions (m_+, m_-, m_0): skew 8x8 blocks satisfying
/// R_{m_0(u)} + R_u m_- = m_+ R_u for every octonion u.
struct TrialityTriple {
    Matrix m_plus;
    Matrix m_minus;
    Matrix m_zero;
};

/// Solves the companion equation for m_0 as an exact linear system over the
/// 28 coordinates of a skew matrix. Throws NotInSpin8Error when the input is
/// not block diagonal with skew blocks, or when no (unique) solution exists.
TrialityTriple triality_companion(const Matrix& m);

/// True iff the two diagonal blocks agree. Propagates NotInSpin8Error.
bool is_spin_delta7(const Matrix& m);

struct LieClosureReport {
    std::size_t dimension = 0;
    bool closed = false;
};

/// Span dimension plus a check that every pairwise commutator stays inside
/// the span.
LieClosureReport lie_closure_report(std::span<const Matrix> basis);

/// Block diagonal [[0, -1], [1, 0]] pairing consecutive coordinates, the
/// complex structure of z_s = x_{2s-1} + i x_{2s}.
Matrix std_complex_structure(std::size_t n);

/// Complex matrix of M acting on the coordinates z_s. Throws
/// NotComplexLinearError unless M commutes with std_complex_structure.
ComplexMatrix complexify(const Matrix& m);

}  // namespace cliffgrass::spin

#pragma once

#include <cstddef>

#include "cliffgrass/gauss_complex.hpp"
#include "cliffgrass/matrix.hpp"

/// Golden reference matrices for the verification suites. Everything in this
/// namespace is transcribed data; none of it is computed from the octonion
/// product. The constructive builders elsewhere in the library must
/// reproduce these matrices entry for entry, and the suites compare the two
/// sides. Keep this module free of calls into the builders.
namespace cliffgrass::golden {

/// Right multiplication by i, j, k on quaternions. t in 1..3.
Matrix quat_right(std::size_t t);
/// Left multiplication by i, j, k on quaternions. t in 1..3.
Matrix quat_left(std::size_t t);

/// The nine composed products quat_right(lam) * quat_left(mu) exactly as
/// displayed in the source. Three of the displayed matrices (the ones with
/// lam = 2) carry a sign misprint: they are the negatives of the actual
/// compositions of the displayed factor tables. The verification suite
/// detects and reports this; the value here stays verbatim.
Matrix rl_product(std::size_t lam, std::size_t mu);

/// The same nine compositions computed by multiplying the displayed factor
/// tables quat_right(lam) and quat_left(mu). Still pure reference data (a
/// product of printed matrices), free of the display misprint.
Matrix rl_composition(std::size_t lam, std::size_t mu);

/// Right multiplication by the basis octonion u on R^8. u in 0..7 for
/// (1, i, j, k, e, f, g, h); u = 0 gives the identity.
Matrix oct_right(std::size_t u);

/// The 8x8 composed blocks R_{lam,mu} = R_lam R_mu for imaginary indices
/// 1 <= lam < mu <= 7.
Matrix r_pair(std::size_t lam, std::size_t mu);

/// The eight 16x16 complex structures m_u. u in 0..7.
Matrix m_single(std::size_t u);

/// The 28 16x16 complex structures m_{u,v}, 0 <= u < v <= 7.
Matrix m_pair(std::size_t u, std::size_t v);

/// The eight 16x16 self-dual anticommuting involutions. u in 0..7.
Matrix involution(std::size_t u);

/// The five 8x8 Pauli type involutions. alpha in 1..5.
Matrix sigma(std::size_t alpha);

/// The ten 8x8 compositions sigma_alpha sigma_beta, alpha < beta.
Matrix sigma_pair(std::size_t alpha, std::size_t beta);

/// The five printed 4x4 complex forms of the operators for i, j, k, e, f.
/// u in 1..5.
ComplexMatrix su4_generator(std::size_t u);

}  // namespace cliffgrass::golden

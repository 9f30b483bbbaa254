#include "cliffgrass/spin.hpp"

#include "cliffgrass/error.hpp"
#include "cliffgrass/linalg.hpp"

namespace cliffgrass::spin {

namespace {

std::string pair_label(std::size_t u, std::size_t v) {
    return "m_{" + Octonion::basis_name(u) + "," + Octonion::basis_name(v) + "}";
}

Matrix zero8() { return Matrix(8, 8); }

}  // namespace

Matrix build_m_u(const Octonion& u) {
    const Matrix r = right_mult_matrix(u);
    const Matrix rc = right_mult_matrix(u.conj());
    return Matrix::block2x2(zero8(), r, -rc, zero8());
}

Matrix build_m_uv(const Octonion& u, const Octonion& v) {
    const Matrix a = -(right_mult_matrix(u) * right_mult_matrix(v.conj()));
    const Matrix b = -(right_mult_matrix(u.conj()) * right_mult_matrix(v));
    return Matrix::block2x2(a, zero8(), zero8(), b);
}

std::vector<SpinGenerator> spin8_basis() {
    std::vector<SpinGenerator> out;
    out.reserve(28);
    for (std::size_t u = 0; u < 8; ++u) {
        for (std::size_t v = u + 1; v < 8; ++v) {
            out.push_back({pair_label(u, v), u, v,
                           build_m_uv(Octonion::basis(u), Octonion::basis(v))});
        }
    }
    return out;
}

std::vector<SpinGenerator> spin7_delta_basis() {
    std::vector<SpinGenerator> out;
    out.reserve(21);
    for (std::size_t u = 1; u < 8; ++u) {
        for (std::size_t v = u + 1; v < 8; ++v) {
            out.push_back({pair_label(u, v), u, v,
                           build_m_uv(Octonion::basis(u), Octonion::basis(v))});
        }
    }
    return out;
}

CliffordSystem clifford_system(SystemKind kind) {
    CliffordSystem cs;
    cs.kind = kind;
    switch (kind) {
        case SystemKind::spin8:
        case SystemKind::spin6: {
            // I_u = [[0, -R_u], [-R_conj(u), 0]]; self-dual because R of an
            // imaginary unit is skew and conj flips its sign.
            const std::size_t count = kind == SystemKind::spin8 ? 8 : 6;
            for (std::size_t u = 0; u < count; ++u) {
                const Octonion b = Octonion::basis(u);
                cs.involutions.push_back(Matrix::block2x2(
                    zero8(), -right_mult_matrix(b), -right_mult_matrix(b.conj()), zero8()));
                cs.labels.push_back("I_" + Octonion::basis_name(u));
            }
            cs.composition_sign = -1;
            break;
        }
        case SystemKind::spin5: {
            const Matrix id4 = Matrix::identity(4);
            const Matrix z4(4, 4);
            cs.involutions.push_back(Matrix::block2x2(z4, id4, id4, z4));
            for (std::size_t t = 1; t <= 3; ++t) {
                const Matrix r = Quaternion::right_mult_matrix(Quaternion::basis(t));
                cs.involutions.push_back(Matrix::block2x2(z4, -r, r, z4));
            }
            cs.involutions.push_back(Matrix::block2x2(id4, z4, z4, -id4));
            for (std::size_t a = 1; a <= 5; ++a) cs.labels.push_back("sigma_" + std::to_string(a));
            cs.composition_sign = +1;
            break;
        }
        default:
            throw ValidationError("clifford_system: unknown kind");
    }
    return cs;
}

std::vector<SpinGenerator> compose_system(const CliffordSystem& cs) {
    const std::size_t n = cs.involutions.size();
    std::vector<SpinGenerator> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            Matrix m = cs.involutions[s] * cs.involutions[t];
            if (cs.composition_sign < 0) m = -m;
            std::string label = cs.kind == SystemKind::spin5
                                    ? "sigma_" + std::to_string(s + 1) + std::to_string(t + 1)
                                    : pair_label(s, t);
            out.push_back({std::move(label), s, t, std::move(m)});
        }
    }
    return out;
}

TrialityTriple triality_companion(const Matrix& m) {
    if (m.rows() != 16 || m.cols() != 16) {
        throw NotInSpin8Error("triality: expected a 16x16 matrix");
    }
    if (!m.block(0, 8, 8, 8).is_zero() || !m.block(8, 0, 8, 8).is_zero()) {
        throw NotInSpin8Error("triality: matrix is not block diagonal");
    }
    TrialityTriple triple;
    triple.m_plus = m.block(0, 0, 8, 8);
    triple.m_minus = m.block(8, 8, 8, 8);
    if (triple.m_plus.transposed() != -triple.m_plus ||
        triple.m_minus.transposed() != -triple.m_minus) {
        throw NotInSpin8Error("triality: diagonal blocks are not skew");
    }

    // Unknowns: the 28 strictly lower entries q_{(s,t)} of the skew matrix
    // m_0 (m_0[t][s] = q, m_0[s][t] = -q for s < t). For each basis octonion
    // u_b the constraint R_{m_0(u_b)} = m_+ R_{u_b} - R_{u_b} m_- gives 64
    // scalar equations, linear in q through R's linearity in its argument.
    std::vector<Matrix> basis_right(8);
    for (std::size_t s = 0; s < 8; ++s) basis_right[s] = right_mult_matrix(Octonion::basis(s));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < 8; ++s) {
        for (std::size_t t = s + 1; t < 8; ++t) pairs.emplace_back(s, t);
    }

    Matrix a(8 * 64, 28);
    std::vector<Rational> rhs(8 * 64);
    for (std::size_t b = 0; b < 8; ++b) {
        const Matrix target = triple.m_plus * basis_right[b] - basis_right[b] * triple.m_minus;
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                const std::size_t row = b * 64 + r * 8 + c;
                rhs[row] = target.at(r, c);
                for (std::size_t p = 0; p < pairs.size(); ++p) {
                    const auto [s, t] = pairs[p];
                    // Column b of the skew pattern: +e_t when b = s, -e_s when b = t.
                    if (b == s) {
                        a.at(row, p) += basis_right[t].at(r, c);
                    } else if (b == t) {
                        a.at(row, p) -= basis_right[s].at(r, c);
                    }
                }
            }
        }
    }

    const LinearSolution sol = solve_exact(a, rhs);
    if (!sol.consistent || !sol.unique) {
        throw NotInSpin8Error("triality: companion equation has no unique solution");
    }
    triple.m_zero = Matrix(8, 8);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [s, t] = pairs[p];
        triple.m_zero.at(t, s) = sol.values[p];
        triple.m_zero.at(s, t) = -sol.values[p];
    }
    return triple;
}

bool is_spin_delta7(const Matrix& m) {
    const TrialityTriple triple = triality_companion(m);
    return triple.m_plus == triple.m_minus;
}

LieClosureReport lie_closure_report(std::span<const Matrix> basis) {
    if (basis.empty()) throw DimensionError("lie_closure_report: empty basis");
    const std::size_t n = basis.front().rows();
    for (const Matrix& m : basis) {
        if (!m.is_square() || m.rows() != n) {
            throw DimensionError("lie_closure_report: matrices must be square of one size");
        }
    }
    LieClosureReport report;
    report.dimension = span_dimension(basis);
    RowEchelon ech(n * n);
    for (const Matrix& m : basis) ech.insert(m.entries());
    report.closed = true;
    for (std::size_t i = 0; i < basis.size() && report.closed; ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!ech.contains(commutator(basis[i], basis[j]).entries())) {
                report.closed = false;
                break;
            }
        }
    }
    return report;
}

Matrix std_complex_structure(std::size_t n) {
    if (n % 2 != 0) throw DimensionError("std_complex_structure: odd dimension");
    Matrix j(n, n);
    for (std::size_t s = 0; 2 * s < n; ++s) {
        j.at(2 * s, 2 * s + 1) = -1;
        j.at(2 * s + 1, 2 * s) = 1;
    }
    return j;
}

ComplexMatrix complexify(const Matrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0) {
        throw DimensionError("complexify: need a square even-sized matrix");
    }
    const Matrix j = std_complex_structure(m.rows());
    if (m * j != j * m) {
        throw NotComplexLinearError("complexify: matrix does not commute with J_std");
    }
    const std::size_t n = m.rows() / 2;
    ComplexMatrix c(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            c.at(s, t) = GaussComplex(m.at(2 * s, 2 * t), m.at(2 * s + 1, 2 * t));
        }
    }
    return c;
}

}  // namespace cliffgrass::spin

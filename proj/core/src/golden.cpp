#include "cliffgrass/golden.hpp"

#include <array>

#include "cliffgrass/error.hpp"

namespace cliffgrass::golden {

namespace {

Matrix m4(const std::array<int, 16>& a) {
    Matrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = a[4 * r + c];
    }
    return m;
}

Matrix zero4() { return Matrix(4, 4); }

// Block layout helpers for the printed 8x8 and 16x16 matrices.
Matrix diag_blocks(const Matrix& top, const Matrix& bottom) {
    return Matrix::block2x2(top, Matrix(top.rows(), top.rows()), Matrix(top.rows(), top.rows()),
                            bottom);
}

Matrix off_blocks(const Matrix& top_right, const Matrix& bottom_left) {
    const std::size_t n = top_right.rows();
    return Matrix::block2x2(Matrix(n, n), top_right, bottom_left, Matrix(n, n));
}

}  // namespace

Matrix quat_right(std::size_t t) {
    switch (t) {
        case 1:
            return m4({0, -1, 0, 0,
                       1, 0, 0, 0,
                       0, 0, 0, 1,
                       0, 0, -1, 0});
        case 2:
            return m4({0, 0, -1, 0,
                       0, 0, 0, -1,
                       1, 0, 0, 0,
                       0, 1, 0, 0});
        case 3:
            return m4({0, 0, 0, -1,
                       0, 0, 1, 0,
                       0, -1, 0, 0,
                       1, 0, 0, 0});
        default:
            throw ValidationError("golden::quat_right: index must be 1..3");
    }
}

Matrix quat_left(std::size_t t) {
    switch (t) {
        case 1:
            return m4({0, -1, 0, 0,
                       1, 0, 0, 0,
                       0, 0, 0, -1,
                       0, 0, 1, 0});
        case 2:
            return m4({0, 0, -1, 0,
                       0, 0, 0, 1,
                       1, 0, 0, 0,
                       0, -1, 0, 0});
        case 3:
            return m4({0, 0, 0, -1,
                       0, 0, -1, 0,
                       0, 1, 0, 0,
                       1, 0, 0, 0});
        default:
            throw ValidationError("golden::quat_left: index must be 1..3");
    }
}

Matrix rl_product(std::size_t lam, std::size_t mu) {
    if (lam < 1 || lam > 3 || mu < 1 || mu > 3) {
        throw ValidationError("golden::rl_product: indices must be 1..3");
    }
    static const std::array<std::array<int, 16>, 9> table = {{
        // R_i L_i
        {-1, 0, 0, 0,
         0, -1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, 1},
        // R_i L_j
        {0, 0, 0, -1,
         0, 0, -1, 0,
         0, -1, 0, 0,
         -1, 0, 0, 0},
        // R_i L_k
        {0, 0, 1, 0,
         0, 0, 0, -1,
         1, 0, 0, 0,
         0, -1, 0, 0},
        // R_j L_i
        {0, 0, 0, -1,
         0, 0, 1, 0,
         0, 1, 0, 0,
         -1, 0, 0, 0},
        // R_j L_j
        {1, 0, 0, 0,
         0, -1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, -1},
        // R_j L_k
        {0, 1, 0, 0,
         1, 0, 0, 0,
         0, 0, 0, 1,
         0, 0, 1, 0},
        // R_k L_i
        {0, 0, -1, 0,
         0, 0, 0, -1,
         -1, 0, 0, 0,
         0, -1, 0, 0},
        // R_k L_j
        {0, 1, 0, 0,
         1, 0, 0, 0,
         0, 0, 0, -1,
         0, 0, -1, 0},
        // R_k L_k
        {-1, 0, 0, 0,
         0, 1, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, -1},
    }};
    return m4(table[(lam - 1) * 3 + (mu - 1)]);
}

Matrix rl_composition(std::size_t lam, std::size_t mu) {
    return quat_right(lam) * quat_left(mu);
}

Matrix oct_right(std::size_t u) {
    const Matrix id4 = Matrix::identity(4);
    switch (u) {
        case 0:
            return Matrix::identity(8);
        case 1:
        case 2:
        case 3:
            return diag_blocks(quat_right(u), -quat_right(u));
        case 4:
            return off_blocks(-id4, id4);
        case 5:
        case 6:
        case 7:
            return off_blocks(quat_left(u - 4), quat_left(u - 4));
        default:
            throw ValidationError("golden::oct_right: index must be 0..7");
    }
}

Matrix r_pair(std::size_t lam, std::size_t mu) {
    if (lam < 1 || mu > 7 || lam >= mu) {
        throw ValidationError("golden::r_pair: need imaginary indices lam < mu");
    }
    struct Entry {
        bool diagonal;
        int sign_top;
        int sign_bottom;
        int base;  // 1..3 quat_right, 11..13 quat_left, 100 + 3*(lam-1)+(mu-1) rl_product
    };
    auto key = [](std::size_t a, std::size_t b) { return a * 10 + b; };
    auto entry = [&](std::size_t a, std::size_t b) -> Entry {
        switch (key(a, b)) {
            case 12: return {true, -1, -1, 3};        // R_{i,j} = -R_k blocks
            case 13: return {true, +1, +1, 2};        // R_{i,k} = +R_j blocks
            case 14: return {false, -1, -1, 1};       // R_{i,e}
            case 15: return {false, +1, -1, 100};     // R_{i,f} via R_i L_i
            case 16: return {false, +1, -1, 101};     // R_{i,g} via R_i L_j
            case 17: return {false, +1, -1, 102};     // R_{i,h} via R_i L_k
            case 23: return {true, -1, -1, 1};        // R_{j,k}
            case 24: return {false, -1, -1, 2};       // R_{j,e}
            case 25: return {false, +1, -1, 103};     // R_{j,f}
            case 26: return {false, +1, -1, 104};     // R_{j,g}
            case 27: return {false, +1, -1, 105};     // R_{j,h}
            case 34: return {false, -1, -1, 3};       // R_{k,e}
            case 35: return {false, +1, -1, 106};     // R_{k,f}
            case 36: return {false, +1, -1, 107};     // R_{k,g}
            case 37: return {false, +1, -1, 108};     // R_{k,h}
            case 45: return {true, -1, +1, 11};       // R_{e,f} = -L_i / +L_i
            case 46: return {true, -1, +1, 12};       // R_{e,g}
            case 47: return {true, -1, +1, 13};       // R_{e,h}
            case 56: return {true, +1, +1, 13};       // R_{f,g} = L_k blocks
            case 57: return {true, -1, -1, 12};       // R_{f,h} = -L_j blocks
            case 67: return {true, +1, +1, 11};       // R_{g,h} = L_i blocks
            default:
                throw ValidationError("golden::r_pair: no such pair");
        }
    };
    const Entry en = entry(lam, mu);
    Matrix base = zero4();
    if (en.base >= 100) {
        // The block pattern refers to the composition R^H L^H itself, so it
        // is built from the displayed factor tables rather than from the
        // misprinted product display.
        const int idx = en.base - 100;
        base = rl_composition(idx / 3 + 1, idx % 3 + 1);
    } else if (en.base >= 11) {
        base = quat_left(en.base - 10);
    } else {
        base = quat_right(en.base);
    }
    const Matrix top = en.sign_top < 0 ? -base : base;
    const Matrix bottom = en.sign_bottom < 0 ? -base : base;
    return en.diagonal ? diag_blocks(top, bottom) : off_blocks(top, bottom);
}

Matrix m_single(std::size_t u) {
    const Matrix id8 = Matrix::identity(8);
    if (u == 0) return off_blocks(id8, -id8);
    const Matrix r = oct_right(u);
    return off_blocks(r, r);
}

Matrix m_pair(std::size_t u, std::size_t v) {
    if (u >= v || v > 7) throw ValidationError("golden::m_pair: need 0 <= u < v <= 7");
    if (u == 0) {
        const Matrix r = oct_right(v);
        return diag_blocks(r, -r);
    }
    const Matrix r = r_pair(u, v);
    return diag_blocks(r, r);
}

Matrix involution(std::size_t u) {
    const Matrix id8 = Matrix::identity(8);
    if (u == 0) return off_blocks(-id8, -id8);
    const Matrix r = oct_right(u);
    return off_blocks(-r, r);
}

Matrix sigma(std::size_t alpha) {
    const Matrix id4 = Matrix::identity(4);
    switch (alpha) {
        case 1:
            return off_blocks(id4, id4);
        case 2:
        case 3:
        case 4:
            return off_blocks(-quat_right(alpha - 1), quat_right(alpha - 1));
        case 5:
            return diag_blocks(id4, -id4);
        default:
            throw ValidationError("golden::sigma: index must be 1..5");
    }
}

Matrix sigma_pair(std::size_t alpha, std::size_t beta) {
    if (alpha >= beta || beta > 5 || alpha < 1) {
        throw ValidationError("golden::sigma_pair: need 1 <= alpha < beta <= 5");
    }
    const Matrix id4 = Matrix::identity(4);
    switch (alpha * 10 + beta) {
        case 12: return diag_blocks(quat_right(1), -quat_right(1));
        case 13: return diag_blocks(quat_right(2), -quat_right(2));
        case 14: return diag_blocks(quat_right(3), -quat_right(3));
        case 23: return diag_blocks(quat_right(3), quat_right(3));
        case 24: return diag_blocks(-quat_right(2), -quat_right(2));
        case 34: return diag_blocks(quat_right(1), quat_right(1));
        case 15: return off_blocks(-id4, id4);
        case 25: return off_blocks(quat_right(1), quat_right(1));
        case 35: return off_blocks(quat_right(2), quat_right(2));
        case 45: return off_blocks(quat_right(3), quat_right(3));
        default:
            throw ValidationError("golden::sigma_pair: no such pair");
    }
}

ComplexMatrix su4_generator(std::size_t u) {
    // Entry codes: 0, +-1 real, +-2 imaginary unit.
    auto c4 = [](const std::array<int, 16>& a) {
        ComplexMatrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                switch (a[4 * r + c]) {
                    case 1: m.at(r, c) = GaussComplex(1); break;
                    case -1: m.at(r, c) = GaussComplex(-1); break;
                    case 2: m.at(r, c) = GaussComplex(0, 1); break;
                    case -2: m.at(r, c) = GaussComplex(0, -1); break;
                    default: break;
                }
            }
        }
        return m;
    };
    switch (u) {
        case 1:  // R_i
            return c4({2, 0, 0, 0,
                       0, -2, 0, 0,
                       0, 0, -2, 0,
                       0, 0, 0, 2});
        case 2:  // R_j
            return c4({0, -1, 0, 0,
                       1, 0, 0, 0,
                       0, 0, 0, 1,
                       0, 0, -1, 0});
        case 3:  // R_k
            return c4({0, 2, 0, 0,
                       2, 0, 0, 0,
                       0, 0, 0, -2,
                       0, 0, -2, 0});
        case 4:  // R_e
            return c4({0, 0, -1, 0,
                       0, 0, 0, -1,
                       1, 0, 0, 0,
                       0, 1, 0, 0});
        case 5:  // R_f
            return c4({0, 0, 2, 0,
                       0, 0, 0, 2,
                       2, 0, 0, 0,
                       0, 2, 0, 0});
        default:
            throw ValidationError("golden::su4_generator: index must be 1..5");
    }
}

}  // namespace cliffgrass::golden

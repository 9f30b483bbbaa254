#include "cliffgrass/linalg.hpp"

#include <utility>

#include "cliffgrass/error.hpp"

namespace cliffgrass {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

std::size_t rank_exact(const Matrix& m) {
    const std::size_t R = m.rows();
    const std::size_t C = m.cols();
    if (R == 0 || C == 0) return 0;

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
    for (std::size_t r = 0; r < R; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < C; ++c) {
            l = boost::multiprecision::lcm(l, m.at(r, c).denominator());
        }
        for (std::size_t c = 0; c < C; ++c) {
            const Rational& x = m.at(r, c);
            a[r][c] = x.numerator() * (l / x.denominator());
        }
    }

    // Fraction-free Bareiss elimination with free column choice. Every
    // intermediate entry is a minor of the original integer matrix, and the
    // division by the previous pivot is exact.
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t pick = R;
        for (std::size_t i = row; i < R; ++i) {
            if (a[i][col] == 0) continue;
            if (pick == R || abs_int(a[i][col]) < abs_int(a[pick][col])) pick = i;
        }
        if (pick == R) continue;
        if (pick != row) std::swap(a[pick], a[row]);

        const Integer pivot = a[row][col];
        for (std::size_t i = row + 1; i < R; ++i) {
            const Integer head = a[i][col];
            for (std::size_t j = col + 1; j < C; ++j) {
                Integer t = a[i][j] * pivot;
                if (head != 0 && a[row][j] != 0) t -= head * a[row][j];
                a[i][j] = t / prev;
            }
            a[i][col] = 0;
        }
        prev = pivot;
        ++row;
    }
    return row;
}

std::size_t span_dimension(std::span<const Matrix> ms) {
    if (ms.empty()) throw DimensionError("span_dimension: empty list");
    const std::size_t R = ms.front().rows();
    const std::size_t C = ms.front().cols();
    RowEchelon ech(R * C);
    for (const Matrix& m : ms) {
        if (m.rows() != R || m.cols() != C) {
            throw DimensionError("span_dimension: matrices of mixed shapes");
        }
        ech.insert(m.entries());
    }
    return ech.dimension();
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square()) {
        throw DimensionError("commutator: inputs must be square and equally sized");
    }
    return a * b - b * a;
}

OperatorFlags classify_operator(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("classify_operator: matrix is not square");
    const std::size_t n = m.rows();
    const Matrix mt = m.transposed();
    const Matrix id = Matrix::identity(n);
    OperatorFlags f;
    f.symmetric = (mt == m);
    f.skew = (mt == -m);
    f.orthogonal = (mt * m == id);
    const Matrix sq = m * m;
    f.involution = (sq == id);
    f.complex_structure = f.orthogonal && (sq == -id);
    return f;
}

void RowEchelon::reduce(std::vector<Rational>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational factor = row[pivots_[k]];
        if (factor.is_zero()) continue;
        const auto& base = rows_[k];
        for (std::size_t c = pivots_[k]; c < width_; ++c) {
            if (base[c].is_zero()) continue;
            row[c] -= factor * base[c];
        }
    }
}

bool RowEchelon::insert(std::vector<Rational> row) {
    if (row.size() != width_) throw DimensionError("RowEchelon: row width mismatch");
    reduce(row);
    std::size_t p = width_;
    for (std::size_t c = 0; c < width_; ++c) {
        if (!row[c].is_zero()) {
            p = c;
            break;
        }
    }
    if (p == width_) return false;

    const Rational inv = row[p].reciprocal();
    for (std::size_t c = p; c < width_; ++c) {
        if (!row[c].is_zero()) row[c] *= inv;
    }
    // Back-eliminate to keep the basis fully reduced.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational factor = rows_[k][p];
        if (factor.is_zero()) continue;
        for (std::size_t c = p; c < width_; ++c) {
            if (row[c].is_zero()) continue;
            rows_[k][c] -= factor * row[c];
        }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

bool RowEchelon::contains(std::vector<Rational> row) const {
    if (row.size() != width_) throw DimensionError("RowEchelon: row width mismatch");
    reduce(row);
    for (const auto& x : row) {
        if (!x.is_zero()) return false;
    }
    return true;
}

LinearSolution solve_exact(const Matrix& a, std::span<const Rational> rhs) {
    if (rhs.size() != a.rows()) throw DimensionError("solve_exact: rhs length mismatch");
    const std::size_t n = a.cols();
    RowEchelon ech(n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<Rational> row(n + 1);
        for (std::size_t c = 0; c < n; ++c) row[c] = a.at(r, c);
        row[n] = rhs[r];
        ech.insert(std::move(row));
    }
    LinearSolution sol;
    std::size_t coeff_rank = 0;
    for (std::size_t p : ech.pivots()) {
        if (p == n) {
            sol.consistent = false;
            return sol;  // a pivot in the rhs column means 0 = 1
        }
        ++coeff_rank;
    }
    sol.consistent = true;
    sol.unique = (coeff_rank == n);
    if (sol.unique) {
        sol.values.assign(n, Rational());
        const auto& rows = ech.rows();
        const auto& pivots = ech.pivots();
        for (std::size_t k = 0; k < rows.size(); ++k) {
            sol.values[pivots[k]] = rows[k][n];
        }
    }
    return sol;
}

}  // namespace cliffgrass

#include "cliffgrass/matrix.hpp"

#include "cliffgrass/error.hpp"

namespace cliffgrass {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols_) throw DimensionError("from_rows: ragged rows");
        std::size_t c = 0;
        for (int v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const std::size_t n = a.rows();
    if (!a.is_square() || b.rows() != n || b.cols() != n || c.rows() != n || c.cols() != n ||
        d.rows() != n || d.cols() != n) {
        throw DimensionError("block2x2: blocks must be square and equally sized");
    }
    Matrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = a.at(i, j);
            m.at(i, n + j) = b.at(i, j);
            m.at(n + i, j) = c.at(i, j);
            m.at(n + i, n + j) = d.at(i, j);
        }
    }
    return m;
}

Matrix Matrix::block_diagonal(const Matrix& block, std::size_t copies) {
    if (!block.is_square()) throw DimensionError("block_diagonal: block must be square");
    const std::size_t n = block.rows();
    Matrix m(n * copies, n * copies);
    for (std::size_t k = 0; k < copies; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m.at(k * n + i, k * n + j) = block.at(i, j);
            }
        }
    }
    return m;
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw DimensionError("block: out of range");
    Matrix m(h, w);
    for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t c = 0; c < w; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix mul: inner dimensions disagree");
    Matrix m(a.rows(), b.cols());
    // i-k-j order so the zero skip pays off on the sparse sign matrices
    // that dominate this library.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw DimensionError("apply: vector length mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& x = at(r, c);
            if (x.is_zero() || v[c].is_zero()) continue;
            out[r] += x * v[c];
        }
    }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& m) { return m.scaled(s); }

}  // namespace cliffgrass

#include "cliffgrass/gauss_complex.hpp"

namespace cliffgrass {

std::string GaussComplex::str() const {
    if (im.is_zero()) return re.str();
    std::string s;
    if (!re.is_zero()) {
        s = re.str();
        if (im.sign() > 0) s += '+';
    }
    if (im.is_one()) {
        s += 'i';
    } else if (im == Rational(-1)) {
        s += "-i";
    } else {
        s += im.str();
        s += 'i';
    }
    return s;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussComplex(1);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate_transposed() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    }
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("complex matrix mul: shape mismatch");
    ComplexMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussComplex& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                m.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return m;
}

}  // namespace cliffgrass

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cliffgrass/matrix.hpp"

namespace cliffgrass {

/// Exact rank over the rationals, computed by fraction-free (Bareiss)
/// elimination after clearing denominators row by row.
std::size_t rank_exact(const Matrix& m);

/// Dimension of the rational span of the vectorized matrices. All inputs
/// must share one shape; the list must be nonempty.
std::size_t span_dimension(std::span<const Matrix> ms);

/// AB - BA for square matrices of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact operator predicates. complex_structure means M^2 = -Id and
/// M^t M = Id.
struct OperatorFlags {
    bool orthogonal = false;
    bool symmetric = false;
    bool skew = false;
    bool involution = false;
    bool complex_structure = false;
};

OperatorFlags classify_operator(const Matrix& m);

/// Incremental reduced row echelon form over the rationals. Rows are kept
/// fully reduced with unit pivots, so membership tests and solves read off
/// directly.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}

    /// Reduces the row against the basis and inserts the remainder if it is
    /// nonzero. Returns true when the dimension grew.
    bool insert(std::vector<Rational> row);

    /// True when the row lies in the current span.
    bool contains(std::vector<Rational> row) const;

    std::size_t dimension() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Pivot column of each stored row, in insertion order.
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    void reduce(std::vector<Rational>& row) const;

    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Result of an exact linear solve A x = b.
struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    std::vector<Rational> values;  // valid when consistent && unique
};

LinearSolution solve_exact(const Matrix& a, std::span<const Rational> rhs);

}  // namespace cliffgrass

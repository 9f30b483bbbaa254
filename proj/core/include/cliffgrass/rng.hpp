#pragma once

#include <cstdint>
#include <random>

#include "cliffgrass/even_clifford.hpp"
#include "cliffgrass/octonion.hpp"
#include "cliffgrass/rational.hpp"

namespace cliffgrass {

/// Deterministic source of exact rational test data. Draws come straight
/// from mt19937_64 (whose output sequence is pinned by the standard), so a
/// seed fully determines every sampled value on every platform.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}

    long long integer(long long lo, long long hi);

    /// Rational with numerator in [-9, 9] and denominator in [1, 9].
    Rational rational();
    Rational nonzero_rational();

    Quaternion quaternion();
    Octonion octonion();
    Octonion nonzero_octonion();

    /// Exact unit octonion: a basis vector moved by a handful of rational
    /// plane rotations (cos, sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2)).
    Octonion unit_octonion();

    /// Nonzero octonion exactly orthogonal to u (Gram-Schmidt step).
    Octonion orthogonal_to(const Octonion& u);

    clifford::EvenCliffordElement even_element(std::size_t rank, std::size_t term_count);

private:
    std::mt19937_64 eng_;
};

}  // namespace cliffgrass
